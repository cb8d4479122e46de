#ifndef ORBITSPACE_LP_HPP
#define ORBITSPACE_LP_HPP

// Exact rational linear programming, just enough for strict-feasibility
// questions: a dictionary simplex with Bland's rule (no cycling), plus the
// slack-variable formulation used to find relative interior points.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orbitspace/rational.hpp"

namespace orbitspace {

struct LpResult {
    bool unbounded = false;
    Rational value = 0;
    Vec solution; // structural variable values at the final dictionary
};

// Maximize c.x subject to A x <= b, x >= 0. Requires b >= 0 so that the
// all-slack dictionary is feasible. With stop_when_positive the solve
// returns as soon as the current objective value exceeds zero.
inline LpResult simplex_max(const Matrix& A, const Vec& b, const Vec& c,
                            bool stop_when_positive = false) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n)
            throw Error(ErrorCode::rank_mismatch, "simplex_max: row length mismatch");
        if (b[i] < 0)
            throw Error(ErrorCode::internal, "simplex_max: negative right-hand side");
    }

    Matrix T = A;
    Vec rhs = b;
    Vec obj = c;
    Rational obj_const = 0;
    std::vector<std::size_t> basic(m), nonbasic(n);
    for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
    for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;

    auto extract = [&] {
        Vec x = zero_vec(n);
        for (std::size_t i = 0; i < m; ++i) {
            if (basic[i] < n) x[basic[i]] = rhs[i];
        }
        return x;
    };

    for (;;) {
        if (stop_when_positive && obj_const > 0)
            return {false, obj_const, extract()};

        // Bland: entering column with the smallest variable id.
        std::size_t enter = n;
        std::size_t enter_id = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (obj[j] > 0 && (enter == n || nonbasic[j] < enter_id)) {
                enter = j;
                enter_id = nonbasic[j];
            }
        }
        if (enter == n) return {false, obj_const, extract()};

        // Ratio test; ties again broken by the smallest variable id.
        std::size_t leave = m;
        Rational best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            const Rational ratio = rhs[i] / T[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basic[i] < basic[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) return {true, obj_const, extract()};

        // Pivot: nonbasic[enter] enters the basis, basic[leave] leaves.
        const Rational p = T[leave][enter];
        for (std::size_t j = 0; j < n; ++j) {
            if (j != enter) T[leave][j] /= p;
        }
        T[leave][enter] = Rational(1) / p;
        rhs[leave] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rational f = T[i][enter];
            for (std::size_t j = 0; j < n; ++j) {
                if (j != enter) T[i][j] -= f * T[leave][j];
            }
            T[i][enter] = -f / p;
            rhs[i] -= f * rhs[leave];
        }
        if (obj[enter] != 0) {
            const Rational f = obj[enter];
            for (std::size_t j = 0; j < n; ++j) {
                if (j != enter) obj[j] -= f * T[leave][j];
            }
            obj[enter] = -f / p;
            obj_const += f * rhs[leave];
        }
        std::swap(basic[leave], nonbasic[enter]);
    }
}

// Witness for { x : <u,x> > 0 for all strict rows, <a,x> = 0 for all eq
// rows }, or nullopt. Maximizes a shared slack s with <u,x> >= s under the
// box |x_i| <= 1 (cone membership is scale invariant, so the box loses
// nothing); the system is strictly solvable iff the optimum is positive.
inline std::optional<Vec> strictly_positive_point(const Matrix& strict_rows,
                                                  const Matrix& eq_rows,
                                                  std::size_t n) {
    // Variables: p (n), q (n), s; the point is x = p - q.
    const std::size_t nvars = 2 * n + 1;
    Matrix A;
    Vec b;
    auto push_row = [&](const Vec& u, const Rational& s_coeff, const Rational& rhs) {
        Vec row = zero_vec(nvars);
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = u[i];
            row[n + i] = -u[i];
        }
        row[2 * n] = s_coeff;
        A.push_back(std::move(row));
        b.push_back(rhs);
    };
    for (const auto& u : strict_rows) {
        if (u.size() != n)
            throw Error(ErrorCode::rank_mismatch, "strictly_positive_point: row length mismatch");
        push_row(negate(u), 1, 0); // -<u,x> + s <= 0
    }
    for (const auto& a : eq_rows) {
        if (a.size() != n)
            throw Error(ErrorCode::rank_mismatch, "strictly_positive_point: row length mismatch");
        push_row(a, 0, 0);
        push_row(negate(a), 0, 0);
    }
    for (std::size_t i = 0; i < nvars; ++i) {
        Vec row = zero_vec(nvars);
        row[i] = 1;
        A.push_back(std::move(row));
        b.push_back(Rational(1));
    }
    Vec c = zero_vec(nvars);
    c[2 * n] = 1;

    const LpResult res = simplex_max(A, b, c, /*stop_when_positive=*/true);
    if (res.unbounded || res.value <= 0) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = res.solution[i] - res.solution[n + i];
    return x;
}

// Full-dimensionality of { x : <u,x> >= 0 } is strict feasibility.
inline bool is_strictly_feasible(const Matrix& normals, std::size_t n) {
    return strictly_positive_point(normals, {}, n).has_value();
}

} // namespace orbitspace

#endif // ORBITSPACE_LP_HPP
