#ifndef ORBITSPACE_LINALG_HPP
#define ORBITSPACE_LINALG_HPP

// Exact Gaussian elimination helpers. The reduced row echelon form is the
// unique canonical representative of a row space, which is what makes the
// cone canonical forms downstream deterministic.

#include <cstddef>
#include <utility>
#include <vector>

#include "orbitspace/rational.hpp"

namespace orbitspace {

// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] != 0) { sel = i; break; }
        }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

// Canonical basis of { x : m x = 0 } in ambient dimension n: one vector per
// free column of the RREF, primitive integer, with a +1 direction at the
// free coordinate. Depends only on the row space of m.
inline Matrix kernel_basis(const Matrix& m, std::size_t n) {
    Matrix red = m;
    for (const auto& row : red) {
        if (row.size() != n)
            throw Error(ErrorCode::rank_mismatch, "kernel_basis: row length differs from ambient dimension");
    }
    const std::vector<std::size_t> pivots = rref(red);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(n);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][f];
        basis.push_back(primitive(v));
    }
    return basis;
}

// Canonical basis of the row space: the nonzero RREF rows, primitivized.
inline Matrix row_space_basis(const Matrix& m) {
    Matrix red = m;
    const std::vector<std::size_t> pivots = rref(red);
    Matrix basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(primitive(red[i]));
    return basis;
}

} // namespace orbitspace

#endif // ORBITSPACE_LINALG_HPP
