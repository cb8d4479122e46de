#ifndef ORBITSPACE_REPORT_HPP
#define ORBITSPACE_REPORT_HPP

// Orchestration and reporting: run the enumeration or stratification on a
// parsed problem and render deterministic human or machine output.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitspace/problem.hpp"

namespace orbitspace {

inline constexpr int kReportSchemaVersion = 1;

inline const char* kFactorialityWarning =
    "projective/toric-embeddable flags use criteria stated for factorial ambient varieties; "
    "factoriality is not checked here";

struct CollectionEntry {
    VertexCollection collection;
    std::optional<OrbitSpaceRecord> record; // present when classification was requested
};

struct Report {
    std::string command; // "enumerate" or "strata"
    ProblemDescription input;
    std::vector<std::string> labels;  // coefficient labels in order
    std::set<LabelSet> strata;        // effective strata
    std::size_t candidate_count = 0;
    std::size_t admissible_count = 0;
    std::vector<CollectionEntry> collections;
    std::vector<std::string> warnings;
};

inline Report run_enumerate(const ProblemDescription& desc, bool with_classification) {
    BuiltProblem built = build_problem(desc);
    Report rep;
    rep.command = "enumerate";
    rep.input = desc;
    for (std::size_t i = 0; i < built.divisor.size(); ++i) rep.labels.push_back(built.divisor.label(i));
    rep.strata = built.strata_labels;

    EnumerationResult res = enumerate_collections(built.divisor, built.stratification);
    rep.candidate_count = res.candidate_count;
    rep.admissible_count = res.admissible_count;
    for (auto& c : res.coherent) {
        CollectionEntry entry;
        if (with_classification)
            entry.record = classify(built.divisor, built.stratification, c);
        entry.collection = std::move(c);
        rep.collections.push_back(std::move(entry));
    }
    if (with_classification) rep.warnings.push_back(kFactorialityWarning);
    return rep;
}

inline Report run_strata(const ProblemDescription& desc) {
    if (!desc.fan_source)
        throw Error(ErrorCode::invalid_schema,
                    "the strata command needs a fan-based stratification source");
    BuiltProblem built = build_problem(desc);
    Report rep;
    rep.command = "strata";
    rep.input = desc;
    for (std::size_t i = 0; i < built.divisor.size(); ++i) rep.labels.push_back(built.divisor.label(i));
    rep.strata = built.strata_labels;
    return rep;
}

namespace detail {

inline Json cone_to_json(const Cone& c) {
    Json j;
    j["rays"] = matrix_to_json(c.extreme_rays());
    if (c.lineality_rank() > 0) j["lineality"] = matrix_to_json(c.lineality_basis());
    return j;
}

inline std::string label_set_text(const LabelSet& S) {
    std::string out = "{";
    bool first = true;
    for (const auto& l : S) {
        if (!first) out += ", ";
        out += l;
        first = false;
    }
    return out + "}";
}

inline std::string matrix_text(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ", ";
        out += to_string(m[i]);
    }
    return out;
}

} // namespace detail

inline std::string render_json(const Report& rep) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = rep.command;
    doc["input"] = problem_to_json(rep.input);
    Json strata = Json::array();
    for (const auto& S : rep.strata) strata.push_back(detail::label_set_to_json(S));
    doc["strata"] = std::move(strata);
    if (rep.command == "enumerate") {
        doc["candidate_count"] = rep.candidate_count;
        doc["admissible_count"] = rep.admissible_count;
        doc["coherent_count"] = rep.collections.size();
        Json collections = Json::array();
        for (const auto& entry : rep.collections) {
            Json cj;
            cj["choices"] = detail::matrix_to_json(entry.collection.choices);
            if (entry.record) {
                const OrbitSpaceRecord& rec = *entry.record;
                cj["projective"] = rec.projective;
                cj["toric_embeddable"] = rec.toric_embeddable;
                cj["witness"] = rec.witness ? detail::vec_to_json(*rec.witness) : Json(nullptr);
                Json cones = Json::array();
                for (const auto& [I, cone] : rec.stratum_cones) {
                    Json sj;
                    LabelSet S;
                    for (std::size_t i : I) S.insert(rep.labels.at(i));
                    sj["stratum"] = detail::label_set_to_json(S);
                    sj["cone"] = detail::cone_to_json(cone);
                    cones.push_back(std::move(sj));
                }
                cj["stratum_cones"] = std::move(cones);
            }
            collections.push_back(std::move(cj));
        }
        doc["collections"] = std::move(collections);
    }
    doc["warnings"] = rep.warnings;
    return doc.dump(2) + "\n";
}

inline std::string render_text(const Report& rep) {
    std::string out;
    out += "rank: " + std::to_string(rep.input.rank) + "\n";
    out += "tail rays: " + (rep.input.tail_rays.empty() ? "(none; tail = {0})"
                                                        : detail::matrix_text(rep.input.tail_rays)) + "\n";
    out += "coefficients (" + std::to_string(rep.input.coefficients.size()) + "):\n";
    for (const auto& c : rep.input.coefficients)
        out += "  " + c.label + ": vertices " + detail::matrix_text(c.vertices) + "\n";
    out += "strata (" + std::to_string(rep.strata.size()) + "):";
    for (const auto& S : rep.strata) out += " " + detail::label_set_text(S);
    out += "\n";
    if (rep.command == "enumerate") {
        out += "candidate collections: " + std::to_string(rep.candidate_count) + "\n";
        out += "admissible collections: " + std::to_string(rep.admissible_count) + "\n";
        out += "coherent collections (" + std::to_string(rep.collections.size()) + "):\n";
        std::size_t k = 0;
        for (const auto& entry : rep.collections) {
            ++k;
            out += "  " + std::to_string(k) + ")";
            for (std::size_t i = 0; i < entry.collection.choices.size(); ++i)
                out += " " + rep.labels.at(i) + "=" + to_string(entry.collection.choices[i]);
            if (entry.collection.choices.empty()) out += " (empty collection)";
            out += "\n";
            if (entry.record) {
                const OrbitSpaceRecord& rec = *entry.record;
                out += std::string("     projective: ") + (rec.projective ? "yes" : "no");
                if (rec.witness) out += " (witness " + to_string(*rec.witness) + ")";
                out += std::string("; toric-embeddable: ") + (rec.toric_embeddable ? "yes" : "no") + "\n";
                out += "     stratum cones:\n";
                for (const auto& [I, cone] : rec.stratum_cones) {
                    LabelSet S;
                    for (std::size_t i : I) S.insert(rep.labels.at(i));
                    out += "       " + detail::label_set_text(S) + ": rays " +
                           detail::matrix_text(cone.extreme_rays());
                    if (cone.lineality_rank() > 0)
                        out += "; lineality " + detail::matrix_text(cone.lineality_basis());
                    out += "\n";
                }
            }
        }
    }
    for (const auto& w : rep.warnings) out += "warning: " + w + "\n";
    return out;
}

} // namespace orbitspace

#endif // ORBITSPACE_REPORT_HPP
