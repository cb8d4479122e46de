#include <catch_amalgamated.hpp>

#include "orbitspace/polyhedron.hpp"

using namespace orbitspace;

namespace {
Vec v(std::initializer_list<int> xs) {
    Vec r;
    for (int x : xs) r.push_back(x);
    return r;
}

// the running example: tail of the Grassmannian cone computation
const Cone sigma = Cone::from_generators(2, {v({-1, 1}), v({5, -1})});
const Polyhedron delta1(2, {v({0, 0}), v({2, -1})}, sigma);
const Polyhedron delta2(2, {v({-1, 1})}, sigma);
const Polyhedron delta3(2, {v({0, 0}), v({3, -1})}, sigma);
} // namespace

TEST_CASE("polyhedron construction rejects bad input") {
    CHECK_THROWS_MATCHES(Polyhedron(2, {}, sigma), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::empty_input;
                         }));
    CHECK_THROWS_MATCHES(Polyhedron(2, {v({0, 0})}, Cone::from_halfspaces(2, {v({1, 0})})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::non_pointed_tail;
                         }));
    // midpoint of a segment is not a vertex
    CHECK_THROWS_MATCHES(Polyhedron(2, {v({0, 0}), v({1, 1}), v({2, 2})}, Cone::zero_cone(2)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::not_a_vertex;
                         }));
    // a point swallowed by the tail
    CHECK_THROWS_MATCHES(Polyhedron(2, {v({0, 0}), v({2, 0})},
                                    Cone::from_generators(2, {v({1, 0}), v({1, 1})})),
                         Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::not_a_vertex;
                         }));
    CHECK_THROWS_AS(Polyhedron(2, {v({0, 0}), v({0, 0})}, sigma), Error);
}

TEST_CASE("support evaluation") {
    CHECK(evaluate_support(delta1, v({1, 1})) == 0);
    CHECK(evaluate_support(delta1, v({1, 5})) == -3);
    CHECK(evaluate_support(delta2, v({1, 1})) == 0);
    CHECK_THROWS_MATCHES(evaluate_support(delta1, v({-1, 0})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::unbounded_support;
                         }));
}

TEST_CASE("normal cones at vertices") {
    CHECK(normal_cone_at_vertex(delta2, v({-1, 1})) == dual_cone(sigma));
    CHECK(normal_cone_at_vertex(delta1, v({0, 0})) ==
          Cone::from_generators(2, {v({1, 1}), v({1, 2})}));
    CHECK(normal_cone_at_vertex(delta1, v({2, -1})) ==
          Cone::from_generators(2, {v({1, 2}), v({1, 5})}));
    CHECK_THROWS_MATCHES(normal_cone_at_vertex(delta1, v({1, 1})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::not_a_vertex;
                         }));
    for (const auto& w : delta1.vertices()) CHECK(normal_cone_at_vertex(delta1, w).full_dimensional());
}

TEST_CASE("reduce_to_vertices") {
    SECTION("unit square") {
        const Polyhedron sq = reduce_to_vertices({v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})},
                                                 Cone::zero_cone(2));
        CHECK(sq.vertices().size() == 4);
    }
    SECTION("the Minkowski-sum candidate set") {
        const Polyhedron p =
            reduce_to_vertices({v({0, 0}), v({2, -1}), v({3, -1}), v({5, -2})}, sigma);
        CHECK(p.vertices() == Matrix{v({0, 0}), v({2, -1}), v({5, -2})});
    }
    SECTION("interior point of a segment is dropped") {
        const Polyhedron p = reduce_to_vertices({v({0, 0}), v({1, 1}), v({2, 2})}, Cone::zero_cone(2));
        CHECK(p.vertices() == Matrix{v({0, 0}), v({2, 2})});
    }
    SECTION("duplicates collapse") {
        const Polyhedron p = reduce_to_vertices({v({1, 1}), v({1, 1})}, Cone::zero_cone(2));
        CHECK(p.vertices() == Matrix{v({1, 1})});
    }
}

TEST_CASE("minkowski sums") {
    CHECK(minkowski_sum({delta1, delta3}).vertices() == Matrix{v({0, 0}), v({2, -1}), v({5, -2})});

    const Polyhedron ex(2, {v({0, 0}), v({1, 0})}, Cone::zero_cone(2));
    const Polyhedron ey(2, {v({0, 0}), v({0, 1})}, Cone::zero_cone(2));
    CHECK(minkowski_sum({ex, ey}).vertices().size() == 4);

    // adding a single-vertex polyhedron translates
    const Polyhedron shift(2, {v({-1, 1})}, sigma);
    CHECK(minkowski_sum({delta1, shift}).vertices() == Matrix{v({-1, 1}), v({1, 0})});

    CHECK(minkowski_sum({}, sigma).vertices() == Matrix{v({0, 0})});
    CHECK_THROWS_AS(minkowski_sum({}), Error);
    CHECK_THROWS_MATCHES(minkowski_sum({delta1, ex}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::tail_mismatch;
                         }));
}

TEST_CASE("vertex test on sums without constructing them") {
    CHECK_FALSE(is_vertex_of_sum({delta1, delta3}, {v({0, 0}), v({3, -1})}));
    CHECK(is_vertex_of_sum({delta1, delta3}, {v({2, -1}), v({3, -1})}));
    CHECK(is_vertex_of_sum({delta1, delta3}, {v({0, 0}), v({0, 0})}));
    for (const auto& w : delta1.vertices()) CHECK(is_vertex_of_sum({delta1}, {w}));
    CHECK_THROWS_AS(is_vertex_of_sum({delta1}, {v({7, 7})}), Error);

    // agreement with the explicit canonical-cone route
    const auto by_cones = [&](const Matrix& vs) {
        return cone_dimension(intersect_cones({normal_cone_at_vertex(delta1, vs[0]),
                                               normal_cone_at_vertex(delta3, vs[1])})) == 2;
    };
    for (const auto& w1 : delta1.vertices())
        for (const auto& w3 : delta3.vertices())
            CHECK(is_vertex_of_sum({delta1, delta3}, {w1, w3}) == by_cones({w1, w3}));
}

TEST_CASE("normal quasifan") {
    const Polyhedron sum = minkowski_sum({delta1, delta3});
    const NormalQuasifan qf = normal_quasifan(sum);
    REQUIRE(qf.maximal_cones.size() == 3);
    CHECK(qf.maximal_cones.at(v({0, 0})) == Cone::from_generators(2, {v({1, 1}), v({1, 2})}));
    CHECK(qf.maximal_cones.at(v({2, -1})) == Cone::from_generators(2, {v({1, 2}), v({1, 3})}));
    CHECK(qf.maximal_cones.at(v({5, -2})) == Cone::from_generators(2, {v({1, 3}), v({1, 5})}));
    for (const auto& [vertex, cone] : qf.maximal_cones) CHECK(cone.full_dimensional());

    // distinct vertices have interior-disjoint cones
    for (auto it = qf.maximal_cones.begin(); it != qf.maximal_cones.end(); ++it)
        for (auto jt = std::next(it); jt != qf.maximal_cones.end(); ++jt)
            CHECK_FALSE(common_interior_point({it->second, jt->second}).has_value());

    const NormalQuasifan single = normal_quasifan(delta2);
    REQUIRE(single.maximal_cones.size() == 1);
    CHECK(single.maximal_cones.at(v({-1, 1})) == dual_cone(sigma));
}

TEST_CASE("quasifan membership") {
    const Polyhedron sum = minkowski_sum({delta1, delta3});
    const NormalQuasifan qf = normal_quasifan(sum);

    CHECK(quasifan_contains(qf, Cone::from_generators(2, {v({1, 2}), v({1, 3})})));
    CHECK_FALSE(quasifan_contains(qf, Cone::from_generators(2, {v({1, 1}), v({1, 3})})));
    for (const auto& [vertex, cone] : qf.maximal_cones) CHECK(quasifan_contains(qf, cone));

    // lower-dimensional members: breakpoint rays and the boundary rays
    CHECK(quasifan_contains(qf, Cone::from_generators(2, {v({1, 2})})));
    CHECK(quasifan_contains(qf, Cone::from_generators(2, {v({1, 3})})));
    CHECK(quasifan_contains(qf, Cone::from_generators(2, {v({1, 1})})));
    CHECK(quasifan_contains(qf, Cone::from_generators(2, {v({1, 5})})));
    CHECK(quasifan_contains(qf, Cone::zero_cone(2))); // the sum is full-dimensional
    CHECK_FALSE(quasifan_contains(qf, Cone::from_generators(2, {v({2, 3})})));
    CHECK_FALSE(quasifan_contains(qf, Cone::from_generators(2, {v({1, 0})}))); // outside omega
    CHECK_FALSE(quasifan_contains(qf, dual_cone(sigma)));
}
