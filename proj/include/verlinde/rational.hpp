#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "verlinde/error.hpp"

namespace verlinde {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// Exact conversion; throws if `q` is not an integer or does not fit.
inline std::int64_t to_int64(const Rational& q) {
    check_invariant(is_integer(q), "expected an integer, got " + q.str());
    const BigInt n = numerator_of(q);
    check_invariant(n >= std::numeric_limits<std::int64_t>::min() &&
                        n <= std::numeric_limits<std::int64_t>::max(),
                    "integer out of 64-bit range: " + n.str());
    return n.convert_to<std::int64_t>();
}

/// "p/q" for non-integers, "p" for integers.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        const auto b = t.find_first_not_of(" \t\r\n");
        const auto e = t.find_last_not_of(" \t\r\n");
        t = (b == std::string::npos) ? std::string{} : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw PreconditionError("rational", "empty rational literal");
    const auto valid = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
        throw PreconditionError("rational", "malformed rational literal '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    BigInt n(num), d(den);
    if (d == 0) throw PreconditionError("rational", "zero denominator in '" + s + "'");
    return Rational(n, d);
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Rank of a rational matrix by exact Gaussian elimination.
inline std::size_t matrix_rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Inverse of a square rational matrix; throws on singular input.
inline std::vector<RationalVector> matrix_inverse(const std::vector<RationalVector>& m) {
    const std::size_t n = m.size();
    std::vector<RationalVector> a(n, RationalVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        check_invariant(pivot < n, "matrix_inverse: singular matrix");
        std::swap(a[pivot], a[c]);
        const Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<RationalVector> out(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

}  // namespace verlinde
