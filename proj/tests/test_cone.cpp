#include <catch_amalgamated.hpp>

#include "orbitspace/cone.hpp"

using namespace orbitspace;

namespace {
Vec v(std::initializer_list<int> xs) {
    Vec r;
    for (int x : xs) r.push_back(x);
    return r;
}
Cone gen2(std::initializer_list<int> a, std::initializer_list<int> b) {
    return Cone::from_generators(2, {v(a), v(b)});
}
} // namespace

TEST_CASE("dual cone of the paper tail") {
    const Cone sigma = gen2({-1, 1}, {5, -1});
    const Cone omega = dual_cone(sigma);
    CHECK(omega.extreme_rays() == Matrix{v({1, 1}), v({1, 5})});

    // brute-force oracle: integer u in a box belongs to the dual iff it
    // pairs nonnegatively with both generators
    for (int x = -6; x <= 6; ++x) {
        for (int y = -6; y <= 6; ++y) {
            const Vec u = v({x, y});
            const bool by_definition = dot(u, v({-1, 1})) >= 0 && dot(u, v({5, -1})) >= 0;
            CHECK(omega.contains(u) == by_definition);
        }
    }
}

TEST_CASE("dual of the full space is the zero cone and back") {
    CHECK(dual_cone(Cone::full_space(2)) == Cone::zero_cone(2));
    CHECK(dual_cone(Cone::zero_cone(3)) == Cone::full_space(3));
    CHECK(Cone::zero_cone(2).dim() == 0);
    CHECK(Cone::full_space(2).lineality_rank() == 2);
}

TEST_CASE("nonnegative orthant is self-dual") {
    const Cone orthant = Cone::from_generators(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
    CHECK(dual_cone(orthant) == orthant);
    CHECK(orthant.pointed());
    CHECK(orthant.dim() == 3);
}

TEST_CASE("duality is an involution on assorted cones") {
    const std::vector<Cone> cones = {
        gen2({-1, 1}, {5, -1}),
        gen2({1, 1}, {1, 5}),
        Cone::from_generators(2, {v({1, 2})}),
        Cone::from_halfspaces(2, {v({1, 0})}),            // halfplane, lineality 1
        Cone::from_halfspaces(3, {v({1, 0, 0}), v({0, 1, 0})}),
        Cone::from_generators(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({1, 1, 1})}),
        Cone::full_space(2),
        Cone::zero_cone(2),
    };
    for (const auto& c : cones) CHECK(dual_cone(dual_cone(c)) == c);
}

TEST_CASE("canonical halfspace form is irredundant and primitive") {
    // the same halfplane written with redundant, scaled normals
    const Cone a = Cone::from_halfspaces(2, {v({2, 2}), v({1, 1}), v({3, 0}), v({1, 0}), v({5, 1})});
    const Cone b = Cone::from_halfspaces(2, {v({1, 1}), v({1, 0})});
    CHECK(a == b);
    CHECK(a.facet_normals() == Matrix{v({1, 0}), v({1, 1})});
    for (const auto& h : a.halfspaces()) CHECK(h == primitive(h));
}

TEST_CASE("cone dimension") {
    CHECK(cone_dimension(gen2({1, 1}, {1, 5})) == 2);
    CHECK(cone_dimension(Cone::from_generators(2, {v({1, 2})})) == 1);
    CHECK(cone_dimension(intersect_cones({gen2({1, 1}, {1, 2}), gen2({1, 3}, {1, 5})})) == 0);
    CHECK(cone_dimension(Cone::from_generators(3, {v({1, 0, 0}), v({0, 1, 0})})) == 2);
}

TEST_CASE("intersection of cones") {
    const Cone a = gen2({1, 1}, {1, 3});
    const Cone b = gen2({1, 2}, {1, 5});
    CHECK(intersect_cones({a, b}) == gen2({1, 2}, {1, 3}));
    CHECK(intersect_cones({a, a}) == a);
    CHECK(intersect_cones({gen2({1, 1}, {1, 2}), gen2({1, 2}, {1, 5})}) ==
          Cone::from_generators(2, {v({1, 2})}));
    CHECK_THROWS_AS(intersect_cones({}), Error);

    // membership sampling against the two halfspace systems
    const Cone meet = intersect_cones({a, b});
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y) CHECK(meet.contains(v({x, y})) == (a.contains(v({x, y})) && b.contains(v({x, y}))));
}

TEST_CASE("common interior point") {
    const Cone c1 = gen2({1, 1}, {1, 2});
    const Cone c2 = gen2({1, 1}, {1, 3});
    const Cone c3 = gen2({1, 1}, {1, 4});

    SECTION("nested interiors") {
        const auto p = common_interior_point({c1, c2, c3});
        REQUIRE(p.has_value());
        for (const auto& c : {c1, c2, c3}) CHECK(c.strictly_contains(*p));
    }
    SECTION("a cone with itself") {
        const auto p = common_interior_point({c1, c1});
        REQUIRE(p.has_value());
        CHECK(c1.strictly_contains(*p));
    }
    SECTION("separated interiors") {
        CHECK_FALSE(common_interior_point({gen2({1, 1}, {1, 3}), gen2({1, 3}, {1, 5})}).has_value());
    }
    SECTION("relative interiors of lower-dimensional cones") {
        const Cone ray = Cone::from_generators(2, {v({1, 3})});
        const auto p = common_interior_point({ray, ray});
        REQUIRE(p.has_value());
        CHECK(dot(*p, v({3, -1})) == 0); // stays on the ray's line
        CHECK((*p)[0] > 0);
        CHECK_FALSE(common_interior_point({ray, Cone::from_generators(2, {v({1, 2})})}).has_value());
        // a ray on the boundary of a full-dimensional cone misses its interior
        CHECK_FALSE(common_interior_point({ray, gen2({1, 3}, {1, 5})}).has_value());
    }
}

TEST_CASE("relative interior points") {
    const Cone c = gen2({1, 1}, {1, 5});
    CHECK(c.strictly_contains(c.relative_interior_point()));
    CHECK(Cone::zero_cone(2).relative_interior_point() == zero_vec(2));
    const Cone hp = Cone::from_halfspaces(2, {v({1, 0})});
    const Vec p = hp.relative_interior_point();
    CHECK(dot(p, v({1, 0})) > 0);
}

TEST_CASE("faces of cones") {
    const Cone c = gen2({1, 1}, {1, 2});
    CHECK(is_face_of(Cone::zero_cone(2), c));
    CHECK(is_face_of(Cone::from_generators(2, {v({1, 1})}), c));
    CHECK(is_face_of(c, c));
    CHECK_FALSE(is_face_of(Cone::from_generators(2, {v({2, 3})}), c)); // interior ray
    CHECK_FALSE(is_face_of(Cone::from_generators(2, {v({1, 5})}), c)); // outside
    const Cone hp = Cone::from_halfspaces(2, {v({1, 0})});
    CHECK(is_face_of(Cone::from_halfspaces(2, {v({1, 0}), v({-1, 0})}), hp)); // boundary line
    CHECK_FALSE(is_face_of(Cone::from_generators(2, {v({0, 1})}), hp));
}
