#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "orbitspace/report.hpp"

using namespace orbitspace;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string data_file(const std::string& name) {
    return std::string(ORBITSPACE_DATA_DIR) + "/" + name;
}

ErrorCode code_of(const std::string& text) {
    try {
        parse_problem(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error");
    return ErrorCode::internal;
}

} // namespace

TEST_CASE("parsing the shipped ambient problem") {
    const ProblemDescription desc = parse_problem(slurp(data_file("grassmann-ambient.json")));
    CHECK(desc.rank == 2);
    CHECK(desc.tail_rays == Matrix{{Rational(-1), Rational(1)}, {Rational(5), Rational(-1)}});
    REQUIRE(desc.coefficients.size() == 4);
    CHECK(desc.coefficients[0].label == "D1");
    CHECK(desc.coefficients[0].vertices.size() == 2);
    CHECK(desc.coefficients[1].vertices.size() == 1);
    REQUIRE(desc.fan_source.has_value());
    CHECK(desc.fan_source->fan.rays.size() == 7);
    CHECK(desc.fan_source->fan.maximal_cones.size() == 12);
    CHECK_FALSE(desc.explicit_strata.has_value());
}

TEST_CASE("rationals parse from integers and p/q strings only") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("+4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("3.5"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("a/b"), Error);
}

TEST_CASE("parse errors carry distinct codes") {
    const std::string base = R"({
      "rank": 2,
      "tail_rays": [[-1, 1], [5, -1]],
      "coefficients": [{"label": "D1", "vertices": [[0, 0], [2, -1]]}]
    })";
    CHECK_NOTHROW(parse_problem(base));

    SECTION("decimal float") {
        CHECK(code_of(R"({"rank": 2, "tail_rays": [[0.5, 1]], "coefficients": []})") ==
              ErrorCode::malformed_number);
    }
    SECTION("rank mismatch in a vector") {
        CHECK(code_of(R"({"rank": 2, "tail_rays": [[1, 2, 3]], "coefficients": []})") ==
              ErrorCode::rank_mismatch);
    }
    SECTION("non-pointed tail") {
        CHECK(code_of(R"({"rank": 2, "tail_rays": [[1, 0], [-1, 0]], "coefficients": []})") ==
              ErrorCode::non_pointed_tail);
    }
    SECTION("non-vertex point is named") {
        const std::string text = R"({
          "rank": 2, "tail_rays": [],
          "coefficients": [{"label": "D1", "vertices": [[0, 0], [1, 1], [2, 2]]}]
        })";
        try {
            parse_problem(text);
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::not_a_vertex);
            CHECK(std::string(e.what()).find("(1, 1)") != std::string::npos);
        }
    }
    SECTION("duplicate coefficient label") {
        CHECK(code_of(R"({
          "rank": 1, "tail_rays": [],
          "coefficients": [{"label": "D", "vertices": [[0]]}, {"label": "D", "vertices": [[1]]}]
        })") == ErrorCode::duplicate_label);
    }
    SECTION("unknown label in explicit strata") {
        CHECK(code_of(R"({
          "rank": 1, "tail_rays": [],
          "coefficients": [{"label": "D", "vertices": [[0]]}],
          "stratification": {"strata": [["Nope"]]}
        })") == ErrorCode::unknown_label);
    }
    SECTION("strata and fan are mutually exclusive") {
        CHECK(code_of(R"({
          "rank": 1, "tail_rays": [], "coefficients": [],
          "stratification": {}
        })") == ErrorCode::invalid_schema);
    }
    SECTION("unknown top-level key") {
        CHECK(code_of(R"({"rank": 1, "tail_rays": [], "coefficients": [], "bogus": 1})") ==
              ErrorCode::invalid_schema);
    }
}

TEST_CASE("empty coefficient list is a valid trivial problem") {
    const ProblemDescription desc =
        parse_problem(R"({"rank": 2, "tail_rays": [[1, 0], [0, 1]], "coefficients": []})");
    const Report rep = run_enumerate(desc, true);
    CHECK(rep.candidate_count == 1);
    REQUIRE(rep.collections.size() == 1);
    CHECK(rep.collections[0].collection.choices.empty());
    REQUIRE(rep.collections[0].record.has_value());
    CHECK(rep.collections[0].record->projective);
}

TEST_CASE("round trip: parse, echo, parse is the identity") {
    for (const std::string name : {"grassmann-ambient.json", "grassmann-g24.json", "curve.json"}) {
        const ProblemDescription first = parse_problem(slurp(data_file(name)));
        const ProblemDescription second = parse_problem(echo_problem(first));
        CHECK(first == second);
        CHECK(echo_problem(first) == echo_problem(second));
    }
}

TEST_CASE("enumerate run on the g24 problem") {
    const ProblemDescription desc = parse_problem(slurp(data_file("grassmann-g24.json")));
    const Report rep = run_enumerate(desc, true);
    CHECK(rep.candidate_count == 16);
    CHECK(rep.admissible_count == 6);
    CHECK(rep.collections.size() == 6);
    CHECK(rep.strata.size() == 18);
    CHECK(rep.warnings.size() == 1);
    int projective = 0, exotic = 0;
    for (const auto& entry : rep.collections) {
        REQUIRE(entry.record.has_value());
        if (entry.record->projective) ++projective;
        if (!entry.record->toric_embeddable) ++exotic;
    }
    CHECK(projective == 4);
    CHECK(exotic == 2);
}

TEST_CASE("curve run multiplies vertex counts") {
    const ProblemDescription desc = parse_problem(slurp(data_file("curve.json")));
    const Report rep = run_enumerate(desc, false);
    CHECK(rep.candidate_count == 6);
    CHECK(rep.collections.size() == 6); // 2 * 3 * 1
    CHECK(rep.warnings.empty());
}

TEST_CASE("strata run derives the fan stratification") {
    const ProblemDescription desc = parse_problem(slurp(data_file("grassmann-ambient.json")));
    const Report rep = run_strata(desc);
    CHECK(rep.command == "strata");
    CHECK(rep.strata.size() == 12);

    const ProblemDescription curve = parse_problem(slurp(data_file("curve.json")));
    CHECK_THROWS_AS(run_strata(curve), Error);
}

TEST_CASE("reports are deterministic byte for byte") {
    for (const std::string name : {"grassmann-ambient.json", "grassmann-g24.json", "curve.json"}) {
        const std::string text = slurp(data_file(name));
        const std::string a = render_json(run_enumerate(parse_problem(text), true));
        const std::string b = render_json(run_enumerate(parse_problem(text), true));
        CHECK(a == b);
    }
}

TEST_CASE("json report structure") {
    const ProblemDescription desc = parse_problem(slurp(data_file("grassmann-ambient.json")));
    const Json doc = Json::parse(render_json(run_enumerate(desc, true)));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "enumerate");
    CHECK(doc["coherent_count"] == 4);
    CHECK(doc["admissible_count"] == 4);
    CHECK(doc["collections"].size() == 4);
    for (const auto& c : doc["collections"]) {
        CHECK(c.contains("choices"));
        CHECK(c.contains("projective"));
        CHECK(c.contains("stratum_cones"));
    }
    // the input echo embedded in the report parses back to the same problem
    CHECK(parse_problem(doc["input"].dump()) == desc);
}

TEST_CASE("text report mentions the key facts") {
    const ProblemDescription desc = parse_problem(slurp(data_file("grassmann-g24.json")));
    const std::string text = render_text(run_enumerate(desc, true));
    CHECK(text.find("coherent collections (6)") != std::string::npos);
    CHECK(text.find("projective: yes") != std::string::npos);
    CHECK(text.find("toric-embeddable: no") != std::string::npos);
    CHECK(text.find("factorial") != std::string::npos);
}
