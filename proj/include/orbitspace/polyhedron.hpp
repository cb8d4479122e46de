#ifndef ORBITSPACE_POLYHEDRON_HPP
#define ORBITSPACE_POLYHEDRON_HPP

// σ-polyhedra in V-representation: a vertex set plus a pointed tail cone.
// The one extremality test used everywhere (construction, reduction,
// Minkowski vertex queries) is full-dimensionality of the vertex normal
// cone, decided by exact strict-feasibility LP.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "orbitspace/cone.hpp"
#include "orbitspace/rational.hpp"

namespace orbitspace {

namespace detail {

// Halfspace normals of the normal cone at v relative to a point set and
// tail: { w - v } for the other points plus the tail generators.
inline Matrix vertex_cone_normals(const Matrix& points, const Cone& tail, const Vec& v) {
    Matrix normals;
    for (const auto& w : points) {
        if (w != v) normals.push_back(sub(w, v));
    }
    for (const auto& r : tail.extreme_rays()) normals.push_back(r);
    return normals;
}

} // namespace detail

class Polyhedron {
public:
    Polyhedron(std::size_t rank, Matrix vertices, Cone tail)
        : rank_(rank), vertices_(std::move(vertices)), tail_(std::move(tail)) {
        if (tail_.rank() != rank_)
            throw Error(ErrorCode::rank_mismatch, "polyhedron tail has a different ambient rank");
        if (!tail_.pointed())
            throw Error(ErrorCode::non_pointed_tail, "polyhedron tail cone must be pointed");
        if (vertices_.empty())
            throw Error(ErrorCode::empty_input, "polyhedron needs at least one vertex");
        for (const auto& v : vertices_) {
            if (v.size() != rank_)
                throw Error(ErrorCode::rank_mismatch, "vertex " + to_string(v) + " has wrong length");
        }
        std::sort(vertices_.begin(), vertices_.end(), VecLess{});
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            if (vertices_[i] == vertices_[i - 1])
                throw Error(ErrorCode::not_a_vertex, "point " + to_string(vertices_[i]) + " is listed twice");
        }
        for (const auto& v : vertices_) {
            if (!is_strictly_feasible(detail::vertex_cone_normals(vertices_, tail_, v), rank_))
                throw Error(ErrorCode::not_a_vertex,
                            "point " + to_string(v) + " is not a vertex of the polyhedron");
        }
    }

    std::size_t rank() const { return rank_; }
    const Matrix& vertices() const { return vertices_; }
    const Cone& tail() const { return tail_; }

    bool has_vertex(const Vec& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v, VecLess{});
    }

    bool operator==(const Polyhedron& other) const = default;

private:
    struct reduced_tag {};
    Polyhedron(reduced_tag, std::size_t rank, Matrix vertices, Cone tail)
        : rank_(rank), vertices_(std::move(vertices)), tail_(std::move(tail)) {}

    friend Polyhedron reduce_to_vertices(const Matrix& points, const Cone& tail);

    std::size_t rank_;
    Matrix vertices_; // lexicographically sorted, pairwise distinct
    Cone tail_;       // pointed
};

// min over the polyhedron of <u,.>, attained at a vertex. Throws when some
// tail ray is negative on u, i.e. u lies outside the dual of the tail.
inline Rational evaluate_support(const Polyhedron& p, const Vec& u) {
    if (u.size() != p.rank())
        throw Error(ErrorCode::rank_mismatch, "evaluate_support: direction has wrong length");
    for (const auto& r : p.tail().extreme_rays()) {
        if (dot(u, r) < 0)
            throw Error(ErrorCode::unbounded_support,
                        "support unbounded below: tail ray " + to_string(r) + " is negative on " + to_string(u));
    }
    Rational best = dot(u, p.vertices().front());
    for (const auto& v : p.vertices()) {
        const Rational val = dot(u, v);
        if (val < best) best = val;
    }
    return best;
}

// λ(v) = { u : <u, w - v> >= 0 for all vertices w } ∩ dual(tail), the
// maximal normal-quasifan cone of the vertex v.
inline Cone normal_cone_at_vertex(const Polyhedron& p, const Vec& v) {
    if (!p.has_vertex(v))
        throw Error(ErrorCode::not_a_vertex, to_string(v) + " is not a listed vertex");
    return Cone::from_halfspaces(p.rank(), detail::vertex_cone_normals(p.vertices(), p.tail(), v));
}

// Normalize a point set into the polyhedron conv(points) + tail: a point
// survives iff its normal cone is full-dimensional.
inline Polyhedron reduce_to_vertices(const Matrix& points, const Cone& tail) {
    if (points.empty())
        throw Error(ErrorCode::empty_input, "reduce_to_vertices: no points given");
    if (!tail.pointed())
        throw Error(ErrorCode::non_pointed_tail, "reduce_to_vertices: tail cone must be pointed");
    const std::size_t n = tail.rank();
    std::set<Vec, VecLess> unique;
    for (const auto& pt : points) {
        if (pt.size() != n)
            throw Error(ErrorCode::rank_mismatch, "point " + to_string(pt) + " has wrong length");
        unique.insert(pt);
    }
    const Matrix all(unique.begin(), unique.end());
    Matrix kept;
    for (const auto& v : all) {
        if (is_strictly_feasible(detail::vertex_cone_normals(all, tail, v), n)) kept.push_back(v);
    }
    return Polyhedron(Polyhedron::reduced_tag{}, n, std::move(kept), tail);
}

// Minkowski sum over a shared tail cone; the empty sum is {0} + tail.
// Computed by summing all vertex tuples and reducing.
inline Polyhedron minkowski_sum(const std::vector<Polyhedron>& ps, const Cone& tail) {
    if (!tail.pointed())
        throw Error(ErrorCode::non_pointed_tail, "minkowski_sum: tail cone must be pointed");
    const std::size_t n = tail.rank();
    std::set<Vec, VecLess> sums;
    sums.insert(zero_vec(n));
    for (const auto& p : ps) {
        if (p.rank() != n)
            throw Error(ErrorCode::rank_mismatch, "minkowski_sum: mixed ambient ranks");
        if (p.tail() != tail)
            throw Error(ErrorCode::tail_mismatch, "minkowski_sum: summand has a different tail cone");
        std::set<Vec, VecLess> next;
        for (const auto& a : sums)
            for (const auto& v : p.vertices()) next.insert(add(a, v));
        sums = std::move(next);
    }
    return reduce_to_vertices(Matrix(sums.begin(), sums.end()), tail);
}

inline Polyhedron minkowski_sum(const std::vector<Polyhedron>& ps) {
    if (ps.empty())
        throw Error(ErrorCode::empty_input, "minkowski_sum: empty list and no tail cone to fall back on");
    return minkowski_sum(ps, ps.front().tail());
}

// Vertex test on a Minkowski sum without constructing the sum: the sum of
// the chosen vertices is a vertex iff the intersection of their normal
// cones is full-dimensional.
inline bool is_vertex_of_sum(const std::vector<Polyhedron>& ps, const Matrix& vs) {
    if (ps.empty())
        throw Error(ErrorCode::empty_input, "is_vertex_of_sum: empty polyhedron list");
    if (ps.size() != vs.size())
        throw Error(ErrorCode::rank_mismatch, "is_vertex_of_sum: one vertex per polyhedron required");
    const std::size_t n = ps.front().rank();
    Matrix normals;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].rank() != n)
            throw Error(ErrorCode::rank_mismatch, "is_vertex_of_sum: mixed ambient ranks");
        if (!ps[i].has_vertex(vs[i]))
            throw Error(ErrorCode::not_a_vertex,
                        to_string(vs[i]) + " is not a vertex of summand " + std::to_string(i));
        for (auto& row : detail::vertex_cone_normals(ps[i].vertices(), ps[i].tail(), vs[i]))
            normals.push_back(std::move(row));
    }
    return is_strictly_feasible(normals, n);
}

struct NormalQuasifan {
    Polyhedron source;
    std::map<Vec, Cone, VecLess> maximal_cones; // vertex -> λ(vertex)
};

inline NormalQuasifan normal_quasifan(const Polyhedron& p) {
    NormalQuasifan qf{p, {}};
    for (const auto& v : p.vertices()) qf.maximal_cones.emplace(v, normal_cone_at_vertex(p, v));
    return qf;
}

// Membership of c in the normal quasifan of `source`, i.e. whether c equals
// λ(F) for some face F: pick a relative interior point u of c, expose the
// face of the source minimizing u, and compare normal cones exactly.
inline bool quasifan_contains(const Polyhedron& source, const Cone& c) {
    if (c.rank() != source.rank())
        throw Error(ErrorCode::rank_mismatch, "quasifan_contains: mixed ambient ranks");
    const Vec u = c.relative_interior_point();
    for (const auto& r : source.tail().extreme_rays()) {
        if (dot(u, r) < 0) return false; // u outside the dual of the tail
    }
    Rational best = dot(u, source.vertices().front());
    for (const auto& v : source.vertices()) best = std::min(best, dot(u, v));
    Matrix normals;
    for (const auto& s : source.vertices()) {
        if (dot(u, s) != best) continue;
        for (const auto& w : source.vertices()) {
            if (w != s) normals.push_back(sub(w, s));
        }
    }
    for (const auto& r : source.tail().extreme_rays()) {
        normals.push_back(r);
        if (dot(u, r) == 0) normals.push_back(negate(r));
    }
    return Cone::from_halfspaces(source.rank(), normals) == c;
}

inline bool quasifan_contains(const NormalQuasifan& qf, const Cone& c) {
    return quasifan_contains(qf.source, c);
}

} // namespace orbitspace

#endif // ORBITSPACE_POLYHEDRON_HPP
