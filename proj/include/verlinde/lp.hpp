#pragma once

#include <vector>

#include "verlinde/rational.hpp"

namespace verlinde::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Rational value;
    RationalVector point;
};

/// Exact two-phase simplex (Bland's rule) for  max c·x  s.t.  A x ≤ b, x free.
/// Free variables are split as x = u − v with u, v ≥ 0.
inline Result maximize(const RationalVector& c, const std::vector<RationalVector>& a, const RationalVector& b) {
    const std::size_t n = c.size(), m = a.size();
    // columns: u (n), v (n), slack (m), artificial (one per row with b < 0)
    std::vector<std::size_t> art_row;
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) art_row.push_back(i);
    const std::size_t n_art = art_row.size();
    const std::size_t cols = 2 * n + m + n_art;
    const std::size_t rhs = cols;

    std::vector<RationalVector> t(m, RationalVector(cols + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    std::size_t next_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const int s = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = s * a[i][j];
            t[i][n + j] = -s * a[i][j];
        }
        t[i][2 * n + i] = s;
        t[i][rhs] = s * b[i];
        if (s < 0) {
            const std::size_t col = 2 * n + m + next_art++;
            t[i][col] = 1;
            basis[i] = col;
        } else {
            basis[i] = 2 * n + i;
        }
    }

    // objective row holds reduced costs z_j − c_j; last entry holds the objective value
    auto run = [&](RationalVector& obj, std::size_t active_cols) -> Status {
        for (;;) {
            std::size_t enter = active_cols;
            for (std::size_t j = 0; j < active_cols; ++j)
                if (obj[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == active_cols) return Status::optimal;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][rhs] / t[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    best = std::move(ratio);
                    leave = i;
                }
            }
            if (leave == m) return Status::unbounded;
            const Rational piv = t[leave][enter];
            for (auto& x : t[leave]) x /= piv;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i == leave || t[i][enter] == 0) continue;
                const Rational f = t[i][enter];
                for (std::size_t j = 0; j <= cols; ++j)
                    if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
            }
            if (obj[enter] != 0) {
                const Rational f = obj[enter];
                for (std::size_t j = 0; j <= cols; ++j)
                    if (t[leave][j] != 0) obj[j] -= f * t[leave][j];
            }
            basis[leave] = enter;
        }
    };

    if (n_art > 0) {
        // phase 1: maximize −Σ artificials
        RationalVector obj(cols + 1, Rational(0));
        for (std::size_t k = 0; k < n_art; ++k) obj[2 * n + m + k] = 1;
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= 2 * n + m)
                for (std::size_t j = 0; j <= cols; ++j) obj[j] -= t[i][j];
        run(obj, cols);
        if (obj[rhs] != 0) return {Status::infeasible, 0, {}};
        // drive remaining (zero-level) artificials out of the basis
        for (std::size_t i = 0; i < t.size();) {
            if (basis[i] < 2 * n + m) {
                ++i;
                continue;
            }
            std::size_t col = 2 * n + m;
            for (std::size_t j = 0; j < 2 * n + m; ++j)
                if (t[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col == 2 * n + m) {  // redundant row
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            const Rational piv = t[i][col];
            for (auto& x : t[i]) x /= piv;
            for (std::size_t r = 0; r < t.size(); ++r) {
                if (r == i || t[r][col] == 0) continue;
                const Rational f = t[r][col];
                for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[i][j];
            }
            basis[i] = col;
            ++i;
        }
        for (auto& row : t)
            for (std::size_t k = 0; k < n_art; ++k) row[2 * n + m + k] = 0;
    }

    const std::size_t active = 2 * n + m;
    RationalVector obj(cols + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        obj[j] = -c[j];
        obj[n + j] = c[j];
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Rational f = obj[basis[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[i][j];
    }
    if (run(obj, active) == Status::unbounded) return {Status::unbounded, 0, {}};

    Result res;
    res.status = Status::optimal;
    res.value = obj[rhs];
    res.point.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (basis[i] < n)
            res.point[basis[i]] += t[i][rhs];
        else if (basis[i] < 2 * n)
            res.point[basis[i] - n] -= t[i][rhs];
    }
    return res;
}

}  // namespace verlinde::lp
