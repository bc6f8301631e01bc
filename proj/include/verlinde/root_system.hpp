#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "verlinde/error.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

/// An integral weight in the fundamental-weight basis (Dynkin labels).
struct Weight {
    std::vector<std::int64_t> coords;

    Weight() = default;
    explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    Weight(std::initializer_list<std::int64_t> c) : coords(c) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

    std::size_t rank() const { return coords.size(); }
    std::int64_t operator[](std::size_t i) const { return coords[i]; }
    std::int64_t& operator[](std::size_t i) { return coords[i]; }

    bool is_dominant() const {
        return std::all_of(coords.begin(), coords.end(), [](auto c) { return c >= 0; });
    }
    /// Strictly dominant, i.e. not fixed by any simple reflection.
    bool is_regular_dominant() const {
        return std::all_of(coords.begin(), coords.end(), [](auto c) { return c > 0; });
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a) {
        for (auto& c : a.coords) c = -c;
        return a;
    }
    friend Weight operator*(std::int64_t s, Weight a) {
        for (auto& c : a.coords) c *= s;
        return a;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto c : w.coords) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
        return h;
    }
};

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeLabel {
    LieType type;
    std::size_t rank;

    std::string str() const { return std::string(1, static_cast<char>(type)) + std::to_string(rank); }
    friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Accepts "A2", "A_2", "a2", "G2" ... ; validates the rank for the type.
inline TypeLabel parse_type_label(const std::string& label) {
    std::string s;
    for (char ch : label)
        if (ch != '_' && ch != ' ') s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    auto reject = [&](const std::string& why) -> TypeLabel {
        throw PreconditionError("group", "unsupported Lie type '" + label + "': " + why);
    };
    if (s.size() < 2 || std::string("ABCDEFG").find(s[0]) == std::string::npos)
        return reject("expected <A|B|C|D|E|F|G><rank>");
    const std::string digits = s.substr(1);
    if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        return reject("rank is not a small positive integer");
    const auto rank = static_cast<std::size_t>(std::stoul(digits));
    const auto type = static_cast<LieType>(s[0]);
    bool ok = false;
    switch (type) {
        case LieType::A: ok = rank >= 1; break;
        case LieType::B: ok = rank >= 2; break;
        case LieType::C: ok = rank >= 2; break;
        case LieType::D: ok = rank >= 4; break;
        case LieType::E: ok = rank >= 6 && rank <= 8; break;
        case LieType::F: ok = rank == 4; break;
        case LieType::G: ok = rank == 2; break;
    }
    if (!ok) return reject("invalid rank for this type");
    return {type, rank};
}

/// A positive root, in simple-root coordinates and in the fundamental-weight basis.
struct Root {
    std::vector<std::int64_t> simple_coords;
    Weight weight;
    Rational norm2;  ///< (α, α) under the normalized inner product
};

/// Cartan data of one simple Lie algebra with the inner product normalized so
/// that the highest root has squared length 2.
class RootSystem {
public:
    TypeLabel label;
    /// cartan[i][j] = <α_i, α_j^∨>; row i is α_i in the fundamental-weight basis.
    std::vector<std::vector<std::int64_t>> cartan;
    /// (α_i, α_i) for each simple root.
    RationalVector simple_norm2;
    /// gram[i][j] = (ω_i, ω_j).
    std::vector<RationalVector> gram;
    std::vector<Root> positive_roots;  // sorted by height, then lexicographically
    Weight theta;
    std::vector<std::int64_t> theta_simple_coords;
    /// comarks[i] = <ω_i, θ^∨>; the level of a weight is Σ comarks[i] λ_i.
    std::vector<std::int64_t> comarks;
    std::int64_t dual_coxeter = 0;

    std::size_t rank() const { return label.rank; }

    Weight rho() const { return Weight(std::vector<std::int64_t>(rank(), 1)); }

    Weight simple_root(std::size_t i) const { return Weight(cartan[i]); }

    Weight fundamental_weight(std::size_t i) const {
        Weight w = Weight::zero(rank());
        w[i] = 1;
        return w;
    }

    /// dim G = rank + number of roots.
    std::size_t group_dimension() const { return rank() + 2 * positive_roots.size(); }

    Rational inner(const RationalVector& a, const RationalVector& b) const {
        Rational s = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram[i][j] * b[j];
        }
        return s;
    }
    Rational inner(const Weight& a, const Weight& b) const { return inner(to_rational(a), to_rational(b)); }

    /// (λ, α) for a weight λ and a root α given in simple-root coordinates.
    Rational pair_with_root(const RationalVector& lambda, const std::vector<std::int64_t>& simple_coords) const {
        Rational s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            if (simple_coords[i] != 0) s += Rational(simple_coords[i]) * lambda[i] * simple_norm2[i] / 2;
        return s;
    }

    /// <λ, θ^∨>.
    std::int64_t level_of(const Weight& w) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rank(); ++i) s += comarks[i] * w[i];
        return s;
    }

    /// Simple-root coordinates of an element of the root lattice (throws otherwise).
    std::vector<std::int64_t> to_simple_coords(const Weight& w) const {
        std::vector<std::int64_t> out(rank());
        for (std::size_t j = 0; j < rank(); ++j) {
            Rational s = 0;
            for (std::size_t i = 0; i < rank(); ++i) s += Rational(w[i]) * cartan_inverse_[i][j];
            out[j] = to_int64(s);
        }
        return out;
    }

    /// Simple reflection s_i(λ) = λ − λ_i α_i.
    Weight reflect(const Weight& w, std::size_t i) const {
        Weight out = w;
        const auto c = w[i];
        if (c == 0) return out;
        for (std::size_t j = 0; j < rank(); ++j) out[j] -= c * cartan[i][j];
        return out;
    }

    static RationalVector to_rational(const Weight& w) {
        RationalVector v(w.rank());
        for (std::size_t i = 0; i < w.rank(); ++i) v[i] = w[i];
        return v;
    }

private:
    friend RootSystem build_root_system(const TypeLabel&);
    std::vector<RationalVector> cartan_inverse_;
};

namespace detail {

struct DynkinData {
    RationalVector norm2;
    // (i, j, (α_i, α_j)) for each edge, 0-based
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> edges;
};

inline DynkinData dynkin_data(const TypeLabel& t) {
    const std::size_t n = t.rank;
    DynkinData d;
    d.norm2.assign(n, Rational(2));
    auto chain = [&](std::size_t upto, const Rational& ip) {
        for (std::size_t i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1, ip);
    };
    switch (t.type) {
        case LieType::A: chain(n, -1); break;
        case LieType::B:
            d.norm2[n - 1] = 1;
            chain(n, -1);
            break;
        case LieType::C:
            for (std::size_t i = 0; i + 1 < n; ++i) d.norm2[i] = 1;
            for (std::size_t i = 0; i + 2 < n; ++i) d.edges.emplace_back(i, i + 1, Rational(-1, 2));
            d.edges.emplace_back(n - 2, n - 1, Rational(-1));
            break;
        case LieType::D:
            chain(n - 1, -1);
            d.edges.emplace_back(n - 3, n - 1, Rational(-1));
            break;
        case LieType::E:
            // Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4.
            d.edges.emplace_back(0, 2, Rational(-1));
            d.edges.emplace_back(1, 3, Rational(-1));
            for (std::size_t i = 2; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1, Rational(-1));
            break;
        case LieType::F:
            d.norm2 = {2, 2, 1, 1};
            d.edges = {{0, 1, Rational(-1)}, {1, 2, Rational(-1)}, {2, 3, Rational(-1, 2)}};
            break;
        case LieType::G:
            d.norm2 = {Rational(2, 3), 2};
            d.edges = {{0, 1, Rational(-1)}};
            break;
    }
    return d;
}

}  // namespace detail

inline RootSystem build_root_system(const TypeLabel& label) {
    const auto data = detail::dynkin_data(label);
    const std::size_t n = label.rank;

    // Simple-root inner products.
    std::vector<RationalVector> b(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) b[i][i] = data.norm2[i];
    for (const auto& [i, j, ip] : data.edges) b[i][j] = b[j][i] = ip;

    RootSystem rs;
    rs.label = label;
    rs.cartan.assign(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rs.cartan[i][j] = to_int64(2 * b[i][j] / data.norm2[j]);

    // Positive roots by height: β + α_i is a root iff q = p − <β, α_i^∨> > 0.
    std::set<std::vector<std::int64_t>> known;
    std::vector<std::vector<std::int64_t>> layer;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    std::vector<std::vector<std::int64_t>> roots;
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end());
        roots.insert(roots.end(), layer.begin(), layer.end());
        std::set<std::vector<std::int64_t>> next;
        for (const auto& beta : layer) {
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t p = 0;
                auto down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                std::int64_t pairing = 0;
                for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * rs.cartan[j][i];
                if (p - pairing > 0) {
                    auto up = beta;
                    up[i] += 1;
                    if (!known.count(up)) next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        known.insert(next.begin(), next.end());
    }

    auto norm2_of = [&](const std::vector<std::int64_t>& c) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += Rational(c[i] * c[j]) * b[i][j];
        return s;
    };

    // Highest root is the unique root of maximal height.
    rs.theta_simple_coords = roots.back();
    const Rational scale = 2 / norm2_of(rs.theta_simple_coords);
    for (auto& row : b)
        for (auto& x : row) x *= scale;
    rs.simple_norm2.resize(n);
    for (std::size_t i = 0; i < n; ++i) rs.simple_norm2[i] = b[i][i];

    std::vector<RationalVector> cartan_q(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cartan_q[i][j] = rs.cartan[i][j];
    rs.cartan_inverse_ = matrix_inverse(cartan_q);

    // C · G = diag((α_i, α_i)/2)  =>  G = C^{-1} diag(...)
    rs.gram.assign(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rs.gram[i][j] = rs.cartan_inverse_[i][j] * rs.simple_norm2[j] / 2;

    for (const auto& c : roots) {
        Root r;
        r.simple_coords = c;
        r.weight = Weight::zero(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r.weight[j] += c[i] * rs.cartan[i][j];
        r.norm2 = norm2_of(c) * scale;
        rs.positive_roots.push_back(std::move(r));
    }
    rs.theta = rs.positive_roots.back().weight;

    // <ω_i, θ^∨> = 2 (ω_i, θ) / (θ, θ) = (ω_i, θ) = c_i (α_i, α_i) / 2.
    rs.comarks.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        rs.comarks[i] = to_int64(Rational(rs.theta_simple_coords[i]) * rs.simple_norm2[i] / 2);
    rs.dual_coxeter = 1 + rs.level_of(rs.rho());

    check_invariant(rs.inner(rs.theta, rs.theta) == 2, "highest root not normalized");
    return rs;
}

inline RootSystem build_root_system(const std::string& label) { return build_root_system(parse_type_label(label)); }

}  // namespace verlinde
