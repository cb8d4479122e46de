#ifndef ORBITSPACE_FAN_HPP
#define ORBITSPACE_FAN_HPP

// Deriving stratifications from toric data: which divisor-label subsets
// co-occur on the toric base, read off from a fan with marked rays, plus
// declared splittings of divisors under pullback.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitspace/cone.hpp"
#include "orbitspace/rational.hpp"

namespace orbitspace {

using LabelSet = std::set<std::string>;

struct Fan {
    std::size_t rank = 0;
    Matrix rays; // primitive integer, pairwise distinct
    std::vector<std::vector<std::size_t>> maximal_cones; // ray index lists

    bool operator==(const Fan&) const = default;
};

// Which prime divisor corresponds to which ray.
struct DivisorMarking {
    std::map<std::string, std::size_t> marks; // label -> ray index

    bool operator==(const DivisorMarking&) const = default;
};

struct Splitting {
    std::vector<std::string> parts; // at least two new labels
    bool co_occur = false;          // false: the parts are pairwise disjoint divisors

    bool operator==(const Splitting&) const = default;
};

struct SplittingSpec {
    std::map<std::string, Splitting> splits; // original label -> its parts

    bool operator==(const SplittingSpec&) const = default;
};

// Structural check of the declared fan data; one message per violation.
inline std::vector<std::string> validate_fan(const Fan& f) {
    std::vector<std::string> violations;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const Vec& r = f.rays[i];
        if (r.size() != f.rank) {
            violations.push_back("ray " + std::to_string(i) + " has length different from the fan rank");
            continue;
        }
        if (is_zero(r))
            violations.push_back("ray " + std::to_string(i) + " is zero");
        else if (!is_integral(r) || r != primitive(r))
            violations.push_back("ray " + std::to_string(i) + " = " + to_string(r) + " is not primitive integer");
        for (std::size_t j = i + 1; j < f.rays.size(); ++j) {
            if (f.rays[j] == r)
                violations.push_back("rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        }
    }
    if (!violations.empty()) return violations;

    std::vector<Cone> cones;
    std::vector<std::set<std::size_t>> ray_sets;
    for (std::size_t k = 0; k < f.maximal_cones.size(); ++k) {
        const auto& idx = f.maximal_cones[k];
        std::set<std::size_t> iset(idx.begin(), idx.end());
        if (idx.empty() || iset.size() != idx.size() ||
            *iset.rbegin() >= f.rays.size()) {
            violations.push_back("maximal cone " + std::to_string(k) + " has invalid or repeated ray indices");
            continue;
        }
        Matrix gens;
        for (std::size_t i : idx) gens.push_back(f.rays[i]);
        Cone c = Cone::from_generators(f.rank, gens);
        if (!c.pointed())
            violations.push_back("maximal cone " + std::to_string(k) + " is not pointed");
        cones.push_back(std::move(c));
        ray_sets.push_back(std::move(iset));
    }
    if (!violations.empty()) return violations;

    for (std::size_t a = 0; a < ray_sets.size(); ++a) {
        for (std::size_t b = 0; b < ray_sets.size(); ++b) {
            if (a != b && std::includes(ray_sets[b].begin(), ray_sets[b].end(), ray_sets[a].begin(),
                                        ray_sets[a].end()))
                violations.push_back("maximal cone " + std::to_string(a) + "'s ray set is contained in cone " +
                                     std::to_string(b) + "'s");
        }
    }
    for (std::size_t a = 0; a < cones.size(); ++a) {
        for (std::size_t b = a + 1; b < cones.size(); ++b) {
            const Cone meet = intersect_cones({cones[a], cones[b]});
            if (!is_face_of(meet, cones[a]) || !is_face_of(meet, cones[b]))
                violations.push_back("maximal cones " + std::to_string(a) + " and " + std::to_string(b) +
                                     " do not intersect in a common face");
        }
    }
    return violations;
}

// All label subsets realized by points of the toric base: a point of the
// orbit of a cone τ lies on the divisor of a marked ray iff that ray
// belongs to τ, so for simplicial maximal cones the realized subsets are
// the power sets of the per-cone marked label sets. Non-simplicial cones
// have no such face enumeration here and are rejected.
inline std::set<LabelSet> occurring_strata(const Fan& f, const DivisorMarking& m) {
    std::set<std::size_t> used;
    for (const auto& [label, ray] : m.marks) {
        if (ray >= f.rays.size())
            throw Error(ErrorCode::invalid_marking, "marking of '" + label + "' refers to ray " +
                                                        std::to_string(ray) + " which does not exist");
        if (!used.insert(ray).second)
            throw Error(ErrorCode::invalid_marking, "two divisor labels mark the same ray");
    }

    std::set<LabelSet> strata;
    strata.insert(LabelSet{});
    for (std::size_t k = 0; k < f.maximal_cones.size(); ++k) {
        const auto& idx = f.maximal_cones[k];
        Matrix gens;
        for (std::size_t i : idx) gens.push_back(f.rays.at(i));
        if (Cone::from_generators(f.rank, gens).dim() != idx.size())
            throw Error(ErrorCode::unsupported_fan,
                        "maximal cone " + std::to_string(k) + " is not simplicial; face enumeration unsupported");
        std::vector<std::string> marked;
        for (const auto& [label, ray] : m.marks) {
            if (std::find(idx.begin(), idx.end(), ray) != idx.end()) marked.push_back(label);
        }
        // every subset of a simplicial cone's rays spans a face
        const std::size_t subsets = std::size_t{1} << marked.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            LabelSet stratum;
            for (std::size_t bit = 0; bit < marked.size(); ++bit) {
                if (mask & (std::size_t{1} << bit)) stratum.insert(marked[bit]);
            }
            strata.insert(std::move(stratum));
        }
    }
    return strata;
}

// Replace each stratum mentioning a split label by the strata over its
// parts: one per part when the parts are disjoint, one per nonempty subset
// of parts when they may co-occur.
inline std::set<LabelSet> apply_splitting(const std::set<LabelSet>& strata, const SplittingSpec& spec) {
    std::set<std::string> new_labels;
    for (const auto& [label, split] : spec.splits) {
        if (split.parts.size() < 2)
            throw Error(ErrorCode::invalid_schema, "splitting of '" + label + "' needs at least two parts");
        for (const auto& part : split.parts) {
            if (!new_labels.insert(part).second)
                throw Error(ErrorCode::duplicate_label, "split part label '" + part + "' is not unique");
        }
        bool seen = false;
        for (const auto& S : strata) seen = seen || S.count(label);
        if (!seen)
            throw Error(ErrorCode::unknown_label, "split label '" + label + "' occurs in no stratum");
    }

    std::set<LabelSet> current = strata;
    for (const auto& [label, split] : spec.splits) {
        std::set<LabelSet> next;
        for (const auto& S : current) {
            if (!S.count(label)) {
                next.insert(S);
                continue;
            }
            LabelSet base = S;
            base.erase(label);
            if (split.co_occur) {
                const std::size_t subsets = std::size_t{1} << split.parts.size();
                for (std::size_t mask = 1; mask < subsets; ++mask) {
                    LabelSet variant = base;
                    for (std::size_t bit = 0; bit < split.parts.size(); ++bit) {
                        if (mask & (std::size_t{1} << bit)) variant.insert(split.parts[bit]);
                    }
                    next.insert(std::move(variant));
                }
            } else {
                for (const auto& part : split.parts) {
                    LabelSet variant = base;
                    variant.insert(part);
                    next.insert(std::move(variant));
                }
            }
        }
        current = std::move(next);
    }
    return current;
}

} // namespace orbitspace

#endif // ORBITSPACE_FAN_HPP
