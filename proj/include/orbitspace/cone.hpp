#ifndef ORBITSPACE_CONE_HPP
#define ORBITSPACE_CONE_HPP

// Rational convex polyhedral cones held simultaneously in generator and
// halfspace form. Both forms are derived from the set itself (extreme rays
// taken inside the orthogonal complement of the lineality space, facet
// normals inside the span, RREF bases for the linear parts), so two cones
// are equal as sets iff their stored data compare equal.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "orbitspace/linalg.hpp"
#include "orbitspace/lp.hpp"
#include "orbitspace/rational.hpp"

namespace orbitspace {

namespace detail {

// V-description of { x : <u,x> >= 0 for all rows }: canonical lineality
// basis plus the extreme rays of the pointed part C ∩ lineality⊥.
//
// The rays are enumerated through the active-set characterization: working
// in coordinates t for the subspace W = lineality⊥ (spanned by the rows of
// the constraint matrix), a nonzero t is an extreme ray of the pointed cone
// { t : M t >= 0 } iff its active constraints have rank dim(W) - 1.
inline std::pair<Matrix, Matrix> rays_and_lineality(const Matrix& normals, std::size_t n) {
    Matrix A;
    for (const auto& row : normals) {
        if (row.size() != n)
            throw Error(ErrorCode::rank_mismatch, "cone data does not match the ambient rank");
        if (!is_zero(row)) A.push_back(primitive(row));
    }
    Matrix lin = kernel_basis(A, n);
    std::sort(lin.begin(), lin.end(), VecLess{});
    const Matrix B = row_space_basis(A);
    const std::size_t k = B.size();
    const std::size_t m = A.size();
    std::set<Vec, VecLess> rays;
    if (k > 0) {
        Matrix M(m, zero_vec(k));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) M[i][j] = dot(A[i], B[j]);

        std::vector<std::size_t> idx(k - 1);
        for (std::size_t i = 0; i + 1 < k; ++i) idx[i] = i;
        bool more = (k - 1 <= m);
        while (more) {
            Matrix sub;
            for (std::size_t i : idx) sub.push_back(M[i]);
            const Matrix ker = kernel_basis(sub, k);
            if (ker.size() == 1) {
                const Vec& t = ker[0];
                bool all_nonneg = true, all_nonpos = true;
                for (std::size_t i = 0; i < m && (all_nonneg || all_nonpos); ++i) {
                    const Rational s = dot(M[i], t);
                    if (s < 0) all_nonneg = false;
                    if (s > 0) all_nonpos = false;
                }
                if (all_nonneg || all_nonpos) {
                    Vec x = zero_vec(n);
                    for (std::size_t j = 0; j < k; ++j) {
                        const Rational coeff = all_nonneg ? t[j] : -t[j];
                        for (std::size_t col = 0; col < n; ++col) x[col] += coeff * B[j][col];
                    }
                    rays.insert(primitive(x));
                }
            }
            // next (k-1)-combination of {0..m-1}; k == 1 has only the empty set
            more = false;
            for (std::size_t i = idx.size(); i-- > 0;) {
                if (idx[i] + (idx.size() - i) < m) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return {std::move(lin), Matrix(rays.begin(), rays.end())};
}

} // namespace detail

class Cone {
public:
    Cone() = default;

    static Cone from_halfspaces(std::size_t rank, const Matrix& normals) {
        Cone c;
        c.rank_ = rank;
        auto [lin, rays] = detail::rays_and_lineality(normals, rank);
        c.lin_ = std::move(lin);
        c.rays_ = std::move(rays);
        c.derive_halfspace_form();
        return c;
    }

    static Cone from_generators(std::size_t rank, const Matrix& generators) {
        // The dual cone's halfspace normals are exactly the generators, so
        // one conversion gives the facets/equations and a second one the
        // canonical rays.
        Cone c;
        c.rank_ = rank;
        auto [eqs, facets] = detail::rays_and_lineality(generators, rank);
        c.eqs_ = std::move(eqs);
        c.facets_ = std::move(facets);
        auto [lin, rays] = detail::rays_and_lineality(c.halfspaces(), rank);
        c.lin_ = std::move(lin);
        c.rays_ = std::move(rays);
        return c;
    }

    static Cone full_space(std::size_t rank) { return from_halfspaces(rank, {}); }
    static Cone zero_cone(std::size_t rank) { return from_generators(rank, {}); }

    std::size_t rank() const { return rank_; }
    std::size_t dim() const { return rank_ - eqs_.size(); }
    std::size_t lineality_rank() const { return lin_.size(); }
    bool pointed() const { return lin_.empty(); }
    bool is_zero() const { return dim() == 0; }
    bool full_dimensional() const { return eqs_.empty(); }

    const Matrix& extreme_rays() const { return rays_; }
    const Matrix& lineality_basis() const { return lin_; }
    const Matrix& facet_normals() const { return facets_; }
    const Matrix& span_equations() const { return eqs_; }

    // Primitive generators: extreme rays plus both signs of the lineality
    // basis, lexicographically sorted.
    Matrix generators() const { return with_signed(rays_, lin_); }

    // Primitive inner normals: facets plus both signs of the span
    // equations, lexicographically sorted.
    Matrix halfspaces() const { return with_signed(facets_, eqs_); }

    bool contains(const Vec& x) const {
        for (const auto& f : facets_) {
            if (dot(f, x) < 0) return false;
        }
        for (const auto& e : eqs_) {
            if (dot(e, x) != 0) return false;
        }
        return true;
    }

    bool strictly_contains(const Vec& x) const {
        for (const auto& f : facets_) {
            if (dot(f, x) <= 0) return false;
        }
        for (const auto& e : eqs_) {
            if (dot(e, x) != 0) return false;
        }
        return true;
    }

    // The sum of all extreme rays is a strictly positive combination of the
    // generators, hence lies in the relative interior (the lineality
    // directions cancel pairwise).
    Vec relative_interior_point() const {
        Vec p = zero_vec(rank_);
        for (const auto& r : rays_) p = add(p, r);
        return p;
    }

    bool operator==(const Cone& other) const = default;

private:
    void derive_halfspace_form() {
        auto [eqs, facets] = detail::rays_and_lineality(generators(), rank_);
        eqs_ = std::move(eqs);
        facets_ = std::move(facets);
    }

    Matrix with_signed(const Matrix& plain, const Matrix& both_signs) const {
        Matrix out = plain;
        for (const auto& v : both_signs) {
            out.push_back(v);
            out.push_back(negate(v));
        }
        std::sort(out.begin(), out.end(), VecLess{});
        return out;
    }

    friend Cone dual_cone(const Cone& c);

    std::size_t rank_ = 0;
    Matrix rays_; // extreme rays of C ∩ lineality⊥, primitive, sorted
    Matrix lin_;  // canonical lineality basis
    Matrix facets_; // facet normals inside span(C), primitive, sorted
    Matrix eqs_;    // canonical basis of span(C)⊥
};

// Duality swaps the two descriptions exactly: the facet normals of C are
// the extreme rays of its dual and vice versa, and the lineality of one is
// the span complement of the other. In particular dual_cone is an exact
// involution on canonical forms.
inline Cone dual_cone(const Cone& c) {
    Cone d;
    d.rank_ = c.rank_;
    d.rays_ = c.facets_;
    d.lin_ = c.eqs_;
    d.facets_ = c.rays_;
    d.eqs_ = c.lin_;
    return d;
}

inline std::size_t cone_dimension(const Cone& c) { return c.dim(); }

inline Cone intersect_cones(const std::vector<Cone>& cones) {
    if (cones.empty())
        throw Error(ErrorCode::empty_input, "intersect_cones: empty cone list");
    const std::size_t n = cones.front().rank();
    Matrix normals;
    for (const auto& c : cones) {
        if (c.rank() != n)
            throw Error(ErrorCode::rank_mismatch, "intersect_cones: mixed ambient ranks");
        for (const auto& h : c.halfspaces()) normals.push_back(h);
    }
    return Cone::from_halfspaces(n, normals);
}

// A rational point lying in the relative interior of every listed cone, if
// one exists: exact strict-feasibility LP over all facet normals with the
// span equations pinned to zero. For full-dimensional cones the relative
// interiors are the topological interiors.
inline std::optional<Vec> common_interior_point(const std::vector<Cone>& cones) {
    if (cones.empty())
        throw Error(ErrorCode::empty_input, "common_interior_point: empty cone list");
    const std::size_t n = cones.front().rank();
    Matrix strict, eqs;
    for (const auto& c : cones) {
        if (c.rank() != n)
            throw Error(ErrorCode::rank_mismatch, "common_interior_point: mixed ambient ranks");
        for (const auto& f : c.facet_normals()) strict.push_back(f);
        for (const auto& e : c.span_equations()) eqs.push_back(e);
    }
    return strictly_positive_point(strict, eqs, n);
}

// Whether `face` is a face of `cone`: it must lie inside the cone and agree
// with the minimal face containing a relative interior point (the cone cut
// by its facet normals active at that point).
inline bool is_face_of(const Cone& face, const Cone& cone) {
    if (face.rank() != cone.rank())
        throw Error(ErrorCode::rank_mismatch, "is_face_of: mixed ambient ranks");
    for (const auto& g : face.generators()) {
        if (!cone.contains(g)) return false;
    }
    const Vec w = face.relative_interior_point();
    Matrix normals = cone.halfspaces();
    for (const auto& f : cone.facet_normals()) {
        if (dot(f, w) == 0) {
            normals.push_back(f);
            normals.push_back(negate(f));
        }
    }
    return Cone::from_halfspaces(cone.rank(), normals) == face;
}

} // namespace orbitspace

#endif // ORBITSPACE_CONE_HPP
