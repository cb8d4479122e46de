#ifndef ORBITSPACE_PROBLEM_HPP
#define ORBITSPACE_PROBLEM_HPP

// The structured problem file: parsing, validation, canonical echo, and
// assembly into a PPDivisor plus Stratification. Rationals travel as JSON
// integers or "p/q" strings; decimal floats are rejected to keep the
// interface exact.

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbitspace/fan.hpp"
#include "orbitspace/ppdivisor.hpp"

namespace orbitspace {

using Json = nlohmann::json;

struct CoefficientSpec {
    std::string label;
    Matrix vertices; // canonical: lexicographically sorted

    bool operator==(const CoefficientSpec&) const = default;
};

struct FanSource {
    Fan fan;
    DivisorMarking marking;
    SplittingSpec splitting;

    bool operator==(const FanSource&) const = default;
};

struct IdentificationSpec {
    LabelSet stratum_a;
    LabelSet stratum_b; // canonical: stratum_a <= stratum_b
    Matrix u_cone_generators;

    bool operator==(const IdentificationSpec&) const = default;
};

struct ProblemDescription {
    std::size_t rank = 0;
    Matrix tail_rays; // canonical generators of the (pointed) tail cone
    std::vector<CoefficientSpec> coefficients;
    std::optional<std::set<LabelSet>> explicit_strata;
    std::optional<FanSource> fan_source;
    std::vector<IdentificationSpec> identifications;

    bool operator==(const ProblemDescription&) const = default;
};

namespace detail {

inline Rational json_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float())
        throw Error(ErrorCode::malformed_number,
                    where + ": decimal floats are not exact; write an integer or a \"p/q\" string");
    throw Error(ErrorCode::malformed_number, where + ": expected an integer or a \"p/q\" string");
}

inline Vec json_vec(const Json& j, std::size_t rank, const std::string& where) {
    if (!j.is_array() || j.size() != rank)
        throw Error(ErrorCode::rank_mismatch,
                    where + ": expected an array of " + std::to_string(rank) + " rationals");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(json_rational(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline Matrix json_matrix(const Json& j, std::size_t rank, const std::string& where) {
    if (!j.is_array())
        throw Error(ErrorCode::invalid_schema, where + ": expected an array of vectors");
    Matrix m;
    for (std::size_t i = 0; i < j.size(); ++i)
        m.push_back(json_vec(j[i], rank, where + "[" + std::to_string(i) + "]"));
    return m;
}

inline LabelSet json_label_set(const Json& j, const std::string& where) {
    if (!j.is_array())
        throw Error(ErrorCode::invalid_schema, where + ": expected an array of labels");
    LabelSet s;
    for (const auto& item : j) {
        if (!item.is_string())
            throw Error(ErrorCode::invalid_schema, where + ": labels must be strings");
        if (!s.insert(item.get<std::string>()).second)
            throw Error(ErrorCode::duplicate_label, where + ": label '" + item.get<std::string>() + "' repeated");
    }
    return s;
}

inline Json rational_to_json(const Rational& r) {
    // Integers that are safely representable go out as JSON numbers,
    // everything else as canonical strings.
    static const Integer max_safe = (Integer(1) << 53);
    if (denominator(r) == 1 && numerator(r) < max_safe && numerator(r) > -max_safe)
        return Json(numerator(r).convert_to<long long>());
    return Json(to_string(r));
}

inline Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rational_to_json(x));
    return arr;
}

inline Json matrix_to_json(const Matrix& m) {
    Json arr = Json::array();
    for (const auto& v : m) arr.push_back(vec_to_json(v));
    return arr;
}

inline Json label_set_to_json(const LabelSet& s) {
    Json arr = Json::array();
    for (const auto& l : s) arr.push_back(l);
    return arr;
}

} // namespace detail

inline ProblemDescription parse_problem(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::invalid_schema, std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw Error(ErrorCode::invalid_schema, "the problem file must hold a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "rank" && key != "tail_rays" && key != "coefficients" && key != "stratification" &&
            key != "identifications")
            throw Error(ErrorCode::invalid_schema, "unknown top-level key '" + key + "'");
    }

    ProblemDescription desc;
    if (!doc.contains("rank") || !doc["rank"].is_number_integer() || doc["rank"].get<long long>() < 1)
        throw Error(ErrorCode::invalid_schema, "rank: expected a positive integer");
    desc.rank = doc["rank"].get<std::size_t>();

    if (!doc.contains("tail_rays"))
        throw Error(ErrorCode::invalid_schema, "tail_rays: missing (use [] for the zero tail cone)");
    const Matrix raw_tail = detail::json_matrix(doc["tail_rays"], desc.rank, "tail_rays");
    const Cone tail = Cone::from_generators(desc.rank, raw_tail);
    if (!tail.pointed())
        throw Error(ErrorCode::non_pointed_tail, "tail_rays: the tail cone must be pointed");
    desc.tail_rays = tail.extreme_rays();

    if (!doc.contains("coefficients") || !doc["coefficients"].is_array())
        throw Error(ErrorCode::invalid_schema, "coefficients: expected an array");
    std::set<std::string> labels;
    for (std::size_t i = 0; i < doc["coefficients"].size(); ++i) {
        const std::string where = "coefficients[" + std::to_string(i) + "]";
        const Json& cj = doc["coefficients"][i];
        if (!cj.is_object() || !cj.contains("label") || !cj["label"].is_string() || !cj.contains("vertices"))
            throw Error(ErrorCode::invalid_schema, where + ": expected {\"label\": ..., \"vertices\": [...]}");
        CoefficientSpec spec;
        spec.label = cj["label"].get<std::string>();
        if (spec.label.empty())
            throw Error(ErrorCode::invalid_schema, where + ": label must be nonempty");
        if (!labels.insert(spec.label).second)
            throw Error(ErrorCode::duplicate_label, where + ": label '" + spec.label + "' appears twice");
        spec.vertices = detail::json_matrix(cj["vertices"], desc.rank, where + ".vertices");
        try {
            spec.vertices = Polyhedron(desc.rank, spec.vertices, tail).vertices();
        } catch (const Error& e) {
            throw Error(e.code(), where + " ('" + spec.label + "'): " + e.what());
        }
        desc.coefficients.push_back(std::move(spec));
    }

    if (doc.contains("stratification")) {
        const Json& sj = doc["stratification"];
        if (!sj.is_object())
            throw Error(ErrorCode::invalid_schema, "stratification: expected an object");
        const bool has_strata = sj.contains("strata");
        const bool has_fan = sj.contains("fan");
        if (has_strata == has_fan)
            throw Error(ErrorCode::invalid_schema,
                        "stratification: give exactly one of \"strata\" or \"fan\"");
        if (has_strata) {
            if (!sj["strata"].is_array())
                throw Error(ErrorCode::invalid_schema, "stratification.strata: expected an array");
            std::set<LabelSet> strata;
            for (std::size_t i = 0; i < sj["strata"].size(); ++i) {
                LabelSet S = detail::json_label_set(sj["strata"][i],
                                                    "stratification.strata[" + std::to_string(i) + "]");
                for (const auto& l : S) {
                    if (!labels.count(l))
                        throw Error(ErrorCode::unknown_label,
                                    "stratification.strata[" + std::to_string(i) + "]: '" + l +
                                        "' is not a coefficient label");
                }
                strata.insert(std::move(S));
            }
            desc.explicit_strata = std::move(strata);
        } else {
            FanSource src;
            const Json& fj = sj["fan"];
            if (!fj.is_object() || !fj.contains("rank") || !fj["rank"].is_number_integer() ||
                fj["rank"].get<long long>() < 1 || !fj.contains("rays") || !fj.contains("maximal_cones"))
                throw Error(ErrorCode::invalid_schema,
                            "stratification.fan: expected {\"rank\", \"rays\", \"maximal_cones\"}");
            src.fan.rank = fj["rank"].get<std::size_t>();
            src.fan.rays = detail::json_matrix(fj["rays"], src.fan.rank, "stratification.fan.rays");
            if (!fj["maximal_cones"].is_array())
                throw Error(ErrorCode::invalid_schema, "stratification.fan.maximal_cones: expected an array");
            for (const auto& cj : fj["maximal_cones"]) {
                if (!cj.is_array())
                    throw Error(ErrorCode::invalid_schema,
                                "stratification.fan.maximal_cones: each cone is an array of ray indices");
                std::vector<std::size_t> idx;
                for (const auto& e : cj) {
                    if (!e.is_number_integer() || e.get<long long>() < 0)
                        throw Error(ErrorCode::invalid_schema,
                                    "stratification.fan.maximal_cones: ray indices are nonnegative integers");
                    idx.push_back(e.get<std::size_t>());
                }
                std::sort(idx.begin(), idx.end());
                src.fan.maximal_cones.push_back(std::move(idx));
            }
            std::sort(src.fan.maximal_cones.begin(), src.fan.maximal_cones.end());

            if (sj.contains("marking")) {
                if (!sj["marking"].is_object())
                    throw Error(ErrorCode::invalid_schema, "stratification.marking: expected {label: ray index}");
                for (const auto& [label, rj] : sj["marking"].items()) {
                    if (!rj.is_number_integer() || rj.get<long long>() < 0)
                        throw Error(ErrorCode::invalid_marking,
                                    "stratification.marking['" + label + "']: expected a ray index");
                    src.marking.marks[label] = rj.get<std::size_t>();
                }
            }
            if (sj.contains("splitting")) {
                if (!sj["splitting"].is_array())
                    throw Error(ErrorCode::invalid_schema, "stratification.splitting: expected an array");
                for (const auto& pj : sj["splitting"]) {
                    if (!pj.is_object() || !pj.contains("label") || !pj["label"].is_string() ||
                        !pj.contains("parts") || !pj["parts"].is_array())
                        throw Error(ErrorCode::invalid_schema,
                                    "stratification.splitting: expected {\"label\", \"parts\", [\"co_occur\"]}");
                    const std::string label = pj["label"].get<std::string>();
                    Splitting split;
                    for (const auto& part : pj["parts"]) {
                        if (!part.is_string())
                            throw Error(ErrorCode::invalid_schema, "splitting parts must be strings");
                        split.parts.push_back(part.get<std::string>());
                    }
                    std::sort(split.parts.begin(), split.parts.end());
                    if (pj.contains("co_occur")) {
                        if (!pj["co_occur"].is_boolean())
                            throw Error(ErrorCode::invalid_schema, "splitting co_occur must be a boolean");
                        split.co_occur = pj["co_occur"].get<bool>();
                    }
                    if (src.splitting.splits.count(label))
                        throw Error(ErrorCode::duplicate_label, "splitting of '" + label + "' given twice");
                    src.splitting.splits.emplace(label, std::move(split));
                }
            }
            desc.fan_source = std::move(src);
        }
    }

    if (doc.contains("identifications")) {
        if (!doc["identifications"].is_array())
            throw Error(ErrorCode::invalid_schema, "identifications: expected an array");
        for (std::size_t i = 0; i < doc["identifications"].size(); ++i) {
            const std::string where = "identifications[" + std::to_string(i) + "]";
            const Json& ij = doc["identifications"][i];
            if (!ij.is_object() || !ij.contains("stratum_a") || !ij.contains("stratum_b") ||
                !ij.contains("u_cone_rays"))
                throw Error(ErrorCode::invalid_schema,
                            where + ": expected {\"stratum_a\", \"stratum_b\", \"u_cone_rays\"}");
            IdentificationSpec spec;
            spec.stratum_a = detail::json_label_set(ij["stratum_a"], where + ".stratum_a");
            spec.stratum_b = detail::json_label_set(ij["stratum_b"], where + ".stratum_b");
            for (const auto& S : {spec.stratum_a, spec.stratum_b}) {
                for (const auto& l : S) {
                    if (!labels.count(l))
                        throw Error(ErrorCode::unknown_label, where + ": '" + l + "' is not a coefficient label");
                }
            }
            const Matrix rays = detail::json_matrix(ij["u_cone_rays"], desc.rank, where + ".u_cone_rays");
            spec.u_cone_generators = Cone::from_generators(desc.rank, rays).generators();
            if (spec.stratum_b < spec.stratum_a) std::swap(spec.stratum_a, spec.stratum_b);
            desc.identifications.push_back(std::move(spec));
        }
        auto less = [](const IdentificationSpec& x, const IdentificationSpec& y) {
            if (x.stratum_a != y.stratum_a) return x.stratum_a < y.stratum_a;
            if (x.stratum_b != y.stratum_b) return x.stratum_b < y.stratum_b;
            return MatrixLess{}(x.u_cone_generators, y.u_cone_generators);
        };
        std::sort(desc.identifications.begin(), desc.identifications.end(), less);
    }

    return desc;
}

// Canonical echo: parse(echo(parse(text))) == parse(text).
inline Json problem_to_json(const ProblemDescription& desc) {
    Json doc;
    doc["rank"] = desc.rank;
    doc["tail_rays"] = detail::matrix_to_json(desc.tail_rays);
    doc["coefficients"] = Json::array();
    for (const auto& c : desc.coefficients) {
        Json cj;
        cj["label"] = c.label;
        cj["vertices"] = detail::matrix_to_json(c.vertices);
        doc["coefficients"].push_back(std::move(cj));
    }
    if (desc.explicit_strata) {
        Json arr = Json::array();
        for (const auto& S : *desc.explicit_strata) arr.push_back(detail::label_set_to_json(S));
        doc["stratification"]["strata"] = std::move(arr);
    }
    if (desc.fan_source) {
        const FanSource& src = *desc.fan_source;
        Json fj;
        fj["rank"] = src.fan.rank;
        fj["rays"] = detail::matrix_to_json(src.fan.rays);
        fj["maximal_cones"] = Json::array();
        for (const auto& idx : src.fan.maximal_cones) fj["maximal_cones"].push_back(idx);
        doc["stratification"]["fan"] = std::move(fj);
        if (!src.marking.marks.empty()) {
            Json mj;
            for (const auto& [label, ray] : src.marking.marks) mj[label] = ray;
            doc["stratification"]["marking"] = std::move(mj);
        }
        if (!src.splitting.splits.empty()) {
            Json arr = Json::array();
            for (const auto& [label, split] : src.splitting.splits) {
                Json pj;
                pj["label"] = label;
                pj["parts"] = split.parts;
                pj["co_occur"] = split.co_occur;
                arr.push_back(std::move(pj));
            }
            doc["stratification"]["splitting"] = std::move(arr);
        }
    }
    if (!desc.identifications.empty()) {
        Json arr = Json::array();
        for (const auto& ident : desc.identifications) {
            Json ij;
            ij["stratum_a"] = detail::label_set_to_json(ident.stratum_a);
            ij["stratum_b"] = detail::label_set_to_json(ident.stratum_b);
            ij["u_cone_rays"] = detail::matrix_to_json(ident.u_cone_generators);
            arr.push_back(std::move(ij));
        }
        doc["identifications"] = std::move(arr);
    }
    return doc;
}

inline std::string echo_problem(const ProblemDescription& desc) { return problem_to_json(desc).dump(2) + "\n"; }

struct BuiltProblem {
    PPDivisor divisor;
    Stratification stratification;
    std::set<LabelSet> strata_labels; // the declared strata, as label sets
};

inline BuiltProblem build_problem(const ProblemDescription& desc) {
    const Cone tail = Cone::from_generators(desc.rank, desc.tail_rays);
    std::vector<std::pair<std::string, Polyhedron>> coeffs;
    for (const auto& c : desc.coefficients)
        coeffs.emplace_back(c.label, Polyhedron(desc.rank, c.vertices, tail));
    PPDivisor divisor(desc.rank, tail, std::move(coeffs));

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < divisor.size(); ++i) index[divisor.label(i)] = i;
    auto to_index_set = [&](const LabelSet& S, const std::string& where) {
        IndexSet I;
        for (const auto& l : S) {
            auto it = index.find(l);
            if (it == index.end())
                throw Error(ErrorCode::unknown_label, where + ": '" + l + "' is not a coefficient label");
            I.insert(it->second);
        }
        return I;
    };

    std::set<LabelSet> strata_labels;
    if (desc.explicit_strata) {
        strata_labels = *desc.explicit_strata;
    } else if (desc.fan_source) {
        const auto violations = validate_fan(desc.fan_source->fan);
        if (!violations.empty()) {
            std::string msg = "the declared fan is invalid:";
            for (const auto& v : violations) msg += "\n  - " + v;
            throw Error(ErrorCode::invalid_schema, msg);
        }
        strata_labels = occurring_strata(desc.fan_source->fan, desc.fan_source->marking);
        if (!desc.fan_source->splitting.splits.empty())
            strata_labels = apply_splitting(strata_labels, desc.fan_source->splitting);
    }

    Stratification strat;
    for (const auto& S : strata_labels) strat.strata.insert(to_index_set(S, "stratification"));
    for (const auto& ident : desc.identifications) {
        Identification id;
        id.stratum_a = to_index_set(ident.stratum_a, "identifications");
        id.stratum_b = to_index_set(ident.stratum_b, "identifications");
        id.u_cone = Cone::from_generators(desc.rank, ident.u_cone_generators);
        strat.identifications.push_back(std::move(id));
    }
    detail::validate_identifications(divisor, strat);

    // Echo the strata as the effective family (empty set and singletons
    // are always present).
    std::set<LabelSet> effective;
    for (const auto& I : strat.effective_strata(divisor.size())) {
        LabelSet S;
        for (std::size_t i : I) S.insert(divisor.label(i));
        effective.insert(std::move(S));
    }
    return BuiltProblem{std::move(divisor), std::move(strat), std::move(effective)};
}

} // namespace orbitspace

#endif // ORBITSPACE_PROBLEM_HPP
