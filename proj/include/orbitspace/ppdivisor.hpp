#ifndef ORBITSPACE_PPDIVISOR_HPP
#define ORBITSPACE_PPDIVISOR_HPP

// Proper polyhedral divisors and the classification of complete orbit
// spaces: admissibility and coherence of vertex collections, exhaustive
// enumeration of the coherent ones, and the projectivity / toric
// embeddability flags of the resulting orbit spaces.

#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "orbitspace/cone.hpp"
#include "orbitspace/polyhedron.hpp"
#include "orbitspace/rational.hpp"

namespace orbitspace {

using IndexSet = std::set<std::size_t>;

// Declared identification of two strata under a contraction map: points of
// the strata are identified for every direction u in the relative interior
// of u_cone. This is input data; the maps themselves are not computed.
struct Identification {
    IndexSet stratum_a;
    IndexSet stratum_b;
    Cone u_cone;

    bool operator==(const Identification&) const = default;
};

// The index subsets { i : y lies on D_i } realized by points of the base
// variety, plus the declared identifications. The empty set and all
// singletons are always present implicitly: prime divisors are nonempty
// and generic points avoid all of them.
struct Stratification {
    std::set<IndexSet> strata;
    std::vector<Identification> identifications;

    std::set<IndexSet> effective_strata(std::size_t coefficient_count) const {
        std::set<IndexSet> out = strata;
        for (const auto& I : strata) {
            for (std::size_t i : I) {
                if (i >= coefficient_count)
                    throw Error(ErrorCode::unknown_label,
                                "stratum references coefficient index " + std::to_string(i) +
                                    " but there are only " + std::to_string(coefficient_count));
            }
        }
        out.insert(IndexSet{});
        for (std::size_t i = 0; i < coefficient_count; ++i) out.insert(IndexSet{i});
        return out;
    }

    bool operator==(const Stratification&) const = default;
};

class PPDivisor {
public:
    PPDivisor(std::size_t rank, Cone tail, std::vector<std::pair<std::string, Polyhedron>> coefficients)
        : rank_(rank), tail_(std::move(tail)), coefficients_(std::move(coefficients)) {
        if (tail_.rank() != rank_)
            throw Error(ErrorCode::rank_mismatch, "pp-divisor tail has a different ambient rank");
        if (!tail_.pointed())
            throw Error(ErrorCode::non_pointed_tail, "pp-divisor tail cone must be pointed");
        std::set<std::string> seen;
        for (const auto& [label, poly] : coefficients_) {
            if (!seen.insert(label).second)
                throw Error(ErrorCode::duplicate_label, "coefficient label '" + label + "' appears twice");
            if (poly.rank() != rank_)
                throw Error(ErrorCode::rank_mismatch, "coefficient '" + label + "' has a different ambient rank");
            if (poly.tail() != tail_)
                throw Error(ErrorCode::tail_mismatch,
                            "coefficient '" + label + "' does not share the common tail cone");
        }
    }

    std::size_t rank() const { return rank_; }
    const Cone& tail() const { return tail_; }
    std::size_t size() const { return coefficients_.size(); }
    const std::string& label(std::size_t i) const { return coefficients_.at(i).first; }
    const Polyhedron& coefficient(std::size_t i) const { return coefficients_.at(i).second; }
    const std::vector<std::pair<std::string, Polyhedron>>& coefficients() const { return coefficients_; }

    bool operator==(const PPDivisor&) const = default;

private:
    std::size_t rank_;
    Cone tail_;
    std::vector<std::pair<std::string, Polyhedron>> coefficients_;
};

// One chosen vertex per coefficient polyhedron, in coefficient order.
struct VertexCollection {
    Matrix choices;

    bool operator==(const VertexCollection&) const = default;
};

struct OrbitSpaceRecord {
    VertexCollection collection;
    std::map<IndexSet, Cone> stratum_cones;
    bool projective = false;
    bool toric_embeddable = false;
    std::optional<Vec> witness; // strictly inside every stratum cone; present iff projective
};

inline Cone weight_cone(const PPDivisor& d) { return dual_cone(d.tail()); }

// Δ_I, the Minkowski sum of the coefficients over a stratum; Δ_∅ = {0} + σ.
inline Polyhedron fiber_polyhedron(const PPDivisor& d, const IndexSet& I) {
    std::vector<Polyhedron> parts;
    for (std::size_t i : I) parts.push_back(d.coefficient(i));
    return minkowski_sum(parts, d.tail());
}

namespace detail {

inline void validate_collection(const PPDivisor& d, const VertexCollection& c) {
    if (c.choices.size() != d.size())
        throw Error(ErrorCode::rank_mismatch, "collection needs exactly one vertex per coefficient");
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!d.coefficient(i).has_vertex(c.choices[i]))
            throw Error(ErrorCode::not_a_vertex, to_string(c.choices[i]) + " is not a vertex of coefficient '" +
                                                     d.label(i) + "'");
    }
}

// Raw halfspace normals of λ_i(choice_i), without the shared tail part.
inline std::vector<Matrix> collection_cone_normals(const PPDivisor& d, const VertexCollection& c) {
    std::vector<Matrix> rows(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (const auto& w : d.coefficient(i).vertices()) {
            if (w != c.choices[i]) rows[i].push_back(sub(w, c.choices[i]));
        }
    }
    return rows;
}

inline bool stratum_cone_full_dimensional(const PPDivisor& d, const std::vector<Matrix>& rows,
                                          const IndexSet& I) {
    Matrix normals;
    for (std::size_t i : I)
        for (const auto& row : rows[i]) normals.push_back(row);
    for (const auto& r : d.tail().extreme_rays()) normals.push_back(r);
    return is_strictly_feasible(normals, d.rank());
}

} // namespace detail

// λ_I = intersection of the chosen vertices' normal cones over the stratum;
// by the Minkowski lemma this is λ(v_I) in Λ(Δ_I) whenever it is
// full-dimensional. λ_∅ is the weight cone.
inline Cone stratum_cone(const PPDivisor& d, const VertexCollection& c, const IndexSet& I) {
    detail::validate_collection(d, c);
    if (I.empty()) return weight_cone(d);
    std::vector<Cone> cones;
    for (std::size_t i : I) {
        if (i >= d.size())
            throw Error(ErrorCode::unknown_label, "stratum index " + std::to_string(i) + " out of range");
        cones.push_back(normal_cone_at_vertex(d.coefficient(i), c.choices[i]));
    }
    return intersect_cones(cones);
}

// A collection is admissible iff every stratum cone is full-dimensional,
// equivalently (Minkowski lemma) the chosen vertices sum to a vertex of the
// fiber polyhedron of every stratum.
inline bool is_admissible(const PPDivisor& d, const Stratification& s, const VertexCollection& c) {
    detail::validate_collection(d, c);
    const auto strata = s.effective_strata(d.size());
    const auto rows = detail::collection_cone_normals(d, c);
    for (const auto& I : strata) {
        if (I.empty()) continue; // λ_∅ = ω is full-dimensional since σ is pointed
        if (!detail::stratum_cone_full_dimensional(d, rows, I)) return false;
    }
    return true;
}

namespace detail {

inline void validate_identifications(const PPDivisor& d, const Stratification& s) {
    const auto strata = s.effective_strata(d.size());
    const Cone omega = weight_cone(d);
    for (const auto& ident : s.identifications) {
        if (!strata.count(ident.stratum_a) || !strata.count(ident.stratum_b))
            throw Error(ErrorCode::invalid_identification,
                        "identification refers to a stratum that does not occur");
        if (ident.u_cone.rank() != d.rank())
            throw Error(ErrorCode::invalid_identification, "identification u-cone has a different ambient rank");
        for (const auto& g : ident.u_cone.generators()) {
            if (!omega.contains(g))
                throw Error(ErrorCode::invalid_identification,
                            "identification u-cone is not contained in the weight cone");
        }
    }
}

// Coherence predicate for a collection already known to be admissible. An
// identification (A, B, u_cone) objects, in either orientation, when the
// cone of one stratum is a quasifan member of the other stratum's fiber
// polyhedron, the contraction acts on directions interior to it, and the
// two stratum cones still differ.
inline bool coherent_given_admissible(const PPDivisor& d, const Stratification& s,
                                      const VertexCollection& c) {
    if (s.identifications.empty()) return true;
    auto orientation_ok = [&](const IndexSet& A, const IndexSet& B, const Cone& u_cone) {
        const Cone lambda_b = stratum_cone(d, c, B);
        if (!quasifan_contains(fiber_polyhedron(d, A), lambda_b)) return true;
        if (!common_interior_point({u_cone, lambda_b}).has_value()) return true;
        return stratum_cone(d, c, A) == lambda_b;
    };
    for (const auto& ident : s.identifications) {
        if (!orientation_ok(ident.stratum_a, ident.stratum_b, ident.u_cone)) return false;
        if (!orientation_ok(ident.stratum_b, ident.stratum_a, ident.u_cone)) return false;
    }
    return true;
}

} // namespace detail

inline bool is_coherent(const PPDivisor& d, const Stratification& s, const VertexCollection& c) {
    if (!is_admissible(d, s, c))
        throw Error(ErrorCode::not_admissible, "is_coherent requires an admissible collection");
    detail::validate_identifications(d, s);
    return detail::coherent_given_admissible(d, s, c);
}

struct EnumerationResult {
    std::vector<VertexCollection> coherent; // lexicographic in vertex indices
    std::size_t admissible_count = 0;
    std::size_t candidate_count = 0;
};

namespace detail {

inline std::size_t enumeration_thread_count(std::size_t candidates) {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("ORBITSPACE_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(parsed));
    }
    return std::max<std::size_t>(1, std::min(n, candidates / 16));
}

} // namespace detail

// Exhaustive enumeration over the product of vertex sets: filter by
// admissibility, then coherence. Candidates may be evaluated in parallel
// (capped by ORBITSPACE_THREADS); the result order is the lexicographic
// candidate order regardless.
inline EnumerationResult enumerate_collections(const PPDivisor& d, const Stratification& s) {
    const std::size_t r = d.size();
    const auto strata = s.effective_strata(r); // validates stratum indices
    (void)strata;
    detail::validate_identifications(d, s);

    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= d.coefficient(i).vertices().size();

    auto candidate = [&](std::size_t linear) {
        VertexCollection c;
        c.choices.resize(r);
        for (std::size_t i = r; i-- > 0;) {
            const auto& verts = d.coefficient(i).vertices();
            c.choices[i] = verts[linear % verts.size()];
            linear /= verts.size();
        }
        return c;
    };

    std::vector<unsigned char> admissible(total, 0), coherent(total, 0);
    auto evaluate = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const VertexCollection c = candidate(k);
            if (!is_admissible(d, s, c)) continue;
            admissible[k] = 1;
            if (detail::coherent_given_admissible(d, s, c)) coherent[k] = 1;
        }
    };

    const std::size_t nthreads = detail::enumeration_thread_count(total);
    if (nthreads <= 1) {
        evaluate(0, total);
    } else {
        std::vector<std::thread> workers;
        const std::size_t chunk = (total + nthreads - 1) / nthreads;
        for (std::size_t t = 0; t < nthreads; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(total, lo + chunk);
            if (lo < hi) workers.emplace_back(evaluate, lo, hi);
        }
        for (auto& w : workers) w.join();
    }

    EnumerationResult result;
    result.candidate_count = total;
    for (std::size_t k = 0; k < total; ++k) {
        if (admissible[k]) ++result.admissible_count;
        if (coherent[k]) result.coherent.push_back(candidate(k));
    }
    return result;
}

inline std::vector<VertexCollection> enumerate_coherent(const PPDivisor& d, const Stratification& s) {
    return enumerate_collections(d, s).coherent;
}

// Orbit-space flags of a coherent collection. The combinatorial criteria
// are stated in the source material under a factoriality hypothesis on the
// ambient variety; the flags are reported unconditionally and interpreting
// them is the caller's responsibility.
inline OrbitSpaceRecord classify(const PPDivisor& d, const Stratification& s, const VertexCollection& c) {
    if (!is_admissible(d, s, c))
        throw Error(ErrorCode::not_admissible, "classify requires a coherent collection");
    detail::validate_identifications(d, s);
    if (!detail::coherent_given_admissible(d, s, c))
        throw Error(ErrorCode::not_coherent, "classify requires a coherent collection");

    OrbitSpaceRecord rec;
    rec.collection = c;
    for (const auto& I : s.effective_strata(d.size())) rec.stratum_cones.emplace(I, stratum_cone(d, c, I));

    std::vector<Cone> cones;
    for (const auto& [I, cone] : rec.stratum_cones) cones.push_back(cone);
    if (auto w = common_interior_point(cones)) {
        rec.projective = true;
        rec.toric_embeddable = true; // a global witness serves every pair
        rec.witness = primitive(*w);
    } else {
        rec.projective = false;
        rec.toric_embeddable = true;
        for (std::size_t i = 0; i < cones.size() && rec.toric_embeddable; ++i) {
            for (std::size_t j = i + 1; j < cones.size(); ++j) {
                if (!common_interior_point({cones[i], cones[j]}).has_value()) {
                    rec.toric_embeddable = false;
                    break;
                }
            }
        }
    }
    return rec;
}

} // namespace orbitspace

#endif // ORBITSPACE_PPDIVISOR_HPP
