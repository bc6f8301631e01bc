#pragma once

// Reference computations that share no code path with the library: closed
// forms, tableau counting, trigonometric sums and brute-force enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "verlinde/rational.hpp"

namespace oracle {

using verlinde::Rational;
using verlinde::RationalVector;

/// SU(2) fusion at level k in spin-doubled labels.
inline int su2_fusion(int a, int b, int c, int k) {
    if ((a + b + c) % 2) return 0;
    return (std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b)) ? 1 : 0;
}

/// Closed-surface Verlinde number from the S-matrix row of the vacuum,
/// S_{0λ} ∝ Π_{α>0} sin(π(λ+ρ,α)/(k+h)). `sine_products` holds the product
/// of sines for each label; the normalization Σ S_{0λ}² = 1 fixes the constant.
inline double verlinde_from_sines(const std::vector<double>& sine_products, int genus) {
    double norm = 0;
    for (double s : sine_products) norm += s * s;
    double total = 0;
    for (double s : sine_products) total += std::pow(s * s / norm, 1.0 - genus);
    return total;
}

inline std::vector<double> su2_sines(int k) {
    std::vector<double> out;
    for (int j = 1; j <= k + 1; ++j) out.push_back(std::sin(std::numbers::pi * j / (k + 2)));
    return out;
}

inline std::vector<double> su3_sines(int k) {
    std::vector<double> out;
    const double n = k + 3;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b)
            out.push_back(std::sin(std::numbers::pi * (a + 1) / n) * std::sin(std::numbers::pi * (b + 1) / n) *
                          std::sin(std::numbers::pi * (a + b + 2) / n));
    return out;
}

/// Weight multiplicities of the SU(3) irrep (a,b) by counting semistandard
/// tableaux of shape (a+b, b) in the letters 1,2,3.
inline std::map<std::pair<int, int>, std::int64_t> su3_ssyt_character(int a, int b) {
    std::map<std::pair<int, int>, std::int64_t> out;
    const int r1 = a + b, r2 = b;
    std::vector<int> top(r1), bottom(r2);
    std::function<void(int)> fill_bottom;
    std::function<void(int)> fill_top = [&](int i) {
        if (i == r1) return fill_bottom(0);
        for (int v = i ? top[i - 1] : 1; v <= 3; ++v) {
            top[i] = v;
            fill_top(i + 1);
        }
    };
    fill_bottom = [&](int i) {
        if (i == r2) {
            int n[4] = {0, 0, 0, 0};
            for (int v : top) ++n[v];
            for (int v : bottom) ++n[v];
            ++out[{n[1] - n[2], n[2] - n[3]}];
            return;
        }
        for (int v = std::max(i ? bottom[i - 1] : 1, top[i] + 1); v <= 3; ++v) {
            bottom[i] = v;
            fill_bottom(i + 1);
        }
    };
    fill_top(0);
    return out;
}

/// Decomposes a formal character into irreducibles by repeatedly stripping the
/// highest remaining weight, using `irrep` for the characters.
template <class Character, class Irrep>
std::map<typename Character::key_type, std::int64_t> peel(Character ch, Irrep irrep) {
    std::map<typename Character::key_type, std::int64_t> out;
    for (;;) {
        std::erase_if(ch, [](const auto& kv) { return kv.second == 0; });
        if (ch.empty()) return out;
        // Any weight of maximal height is the highest weight of some constituent.
        auto best = ch.begin();
        auto height = [](const auto& w) {
            if constexpr (requires { w.second; }) return w.first + w.second;
            else return w;
        };
        for (auto it = ch.begin(); it != ch.end(); ++it)
            if (height(it->first) > height(best->first)) best = it;
        const auto hw = best->first;
        const auto m = best->second;
        out[hw] += m;
        for (const auto& [w, c] : irrep(hw)) ch[w] -= m * c;
    }
}

/// −w₀ on fundamental-weight coordinates, written out per type (Bourbaki numbering).
inline std::vector<std::int64_t> minus_w0(char type, int rank, std::vector<std::int64_t> w) {
    if (type == 'A') return {w.rbegin(), w.rend()};
    if (type == 'D' && rank % 2 == 1) std::swap(w[rank - 2], w[rank - 1]);
    if (type == 'E' && rank == 6) {
        std::swap(w[0], w[5]);
        std::swap(w[2], w[4]);
    }
    return w;
}

inline std::int64_t dual_coxeter(char type, int n) {
    switch (type) {
        case 'A': return n + 1;
        case 'B': return 2 * n - 1;
        case 'C': return n + 1;
        case 'D': return 2 * n - 2;
        case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
        case 'F': return 9;
        default: return 4;
    }
}

inline std::int64_t group_dimension(char type, int n) {
    switch (type) {
        case 'A': return n * (n + 2);
        case 'B':
        case 'C': return n * (2 * n + 1);
        case 'D': return n * (2 * n - 1);
        case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
        case 'F': return 52;
        default: return 14;
    }
}

inline std::int64_t weyl_order(char type, int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    switch (type) {
        case 'A': return f * (n + 1);
        case 'B':
        case 'C': return f << n;
        case 'D': return f << (n - 1);
        case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        case 'F': return 1152;
        default: return 12;
    }
}

/// Solves a square rational system by Gauss–Jordan; nullopt if singular.
inline std::optional<RationalVector> solve(std::vector<RationalVector> m, RationalVector rhs) {
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(rhs[p], rhs[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
            rhs[r] -= f * rhs[c];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

/// Vertices of a bounded polytope {a·x ≤ b} by trying every d-subset of constraints.
inline std::vector<RationalVector> vertices(std::size_t dim, const std::vector<RationalVector>& a,
                                            const RationalVector& b) {
    std::vector<RationalVector> out;
    std::vector<std::size_t> pick(dim);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
        if (depth == dim) {
            std::vector<RationalVector> m;
            RationalVector rhs;
            for (auto i : pick) m.push_back(a[i]), rhs.push_back(b[i]);
            auto x = solve(m, rhs);
            if (!x) return;
            for (std::size_t i = 0; i < a.size(); ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < dim; ++j) s += a[i][j] * (*x)[j];
                if (s > b[i]) return;
            }
            if (std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
            return;
        }
        for (std::size_t i = from; i < a.size(); ++i) {
            pick[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace oracle
