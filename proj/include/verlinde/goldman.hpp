#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "verlinde/polytope.hpp"
#include "verlinde/surface.hpp"

namespace verlinde {

/// Moment polytope of the three-holed sphere for SU(2) in alcove coordinates
/// x = <ξ, θ^∨> ∈ [0,1]: |x−y| ≤ z ≤ min(x+y, 2−x−y).
inline RationalPolytope trinion_polytope_su2() {
    auto h = [](int a, int b, int c, int rhs) {
        return Halfspace{{Rational(a), Rational(b), Rational(c)}, Rational(rhs)};
    };
    RationalPolytope p(3, {h(1, -1, -1, 0), h(-1, 1, -1, 0), h(-1, -1, 1, 0), h(1, 1, 1, 2)});
    for (int i = 0; i < 3; ++i) {
        RationalVector e(3, Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        p.add({e, 1});
        e[static_cast<std::size_t>(i)] = -1;
        p.add({e, 0});
    }
    return p;
}

/// Points (a, b, c)/k with T(a,b,c) > 0, coordinates in the fundamental-weight basis.
inline std::vector<RationalVector> fusion_support_hull(const FusionTable& t) {
    std::vector<RationalVector> pts;
    const std::size_t n = t.size(), r = t.root_system().rank();
    const Rational k(t.level());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (trinion_value(t, a, b, c) <= 0) continue;
                RationalVector p;
                for (auto idx : {a, b, c})
                    for (std::size_t i = 0; i < r; ++i) p.push_back(Rational(t.labels()[idx].weight()[i]) / k);
                pts.push_back(std::move(p));
            }
    return pts;
}

/// Identification of coordinate blocks (trinion, slot) glued together.
class GluingInvolution {
public:
    using Block = std::pair<std::size_t, std::size_t>;

    explicit GluingInvolution(std::vector<std::pair<Block, Block>> pairs) : pairs_(std::move(pairs)) {
        std::set<Block> seen;
        for (const auto& [x, y] : pairs_) {
            if (x == y) throw PreconditionError("involution", "block glued to itself");
            if (!seen.insert(x).second || !seen.insert(y).second)
                throw PreconditionError("involution", "block appears in more than one pair");
        }
    }

    const std::vector<std::pair<Block, Block>>& pairs() const { return pairs_; }

    Block operator()(const Block& b) const {
        for (const auto& [x, y] : pairs_) {
            if (b == x) return y;
            if (b == y) return x;
        }
        return b;
    }

private:
    std::vector<std::pair<Block, Block>> pairs_;
};

inline GluingInvolution gluing_involution(const PantsGraph& pg) {
    std::vector<std::pair<GluingInvolution::Block, GluingInvolution::Block>> pairs;
    for (const auto& e : pg.edges)
        pairs.push_back({{e.primal.trinion, e.primal.index}, {e.dual.trinion, e.dual.index}});
    return GluingInvolution(std::move(pairs));
}

/// Image of the Goldman map: P^l ∩ (κ-fixed subspace), projected to the
/// external legs (in marking order) followed by one coordinate per internal circle.
inline RationalPolytope goldman_polytope(const PantsGraph& pg, const RationalPolytope& trinion,
                                         const GluingInvolution& kappa) {
    pg.validate();
    if (trinion.ambient_dim() != 3)
        throw PreconditionError("polytope", "goldman_polytope supports rank-one trinion polytopes (SU(2)) only");
    {
        std::set<std::pair<GluingInvolution::Block, GluingInvolution::Block>> want, have;
        auto ordered = [](auto x, auto y) { return x < y ? std::pair{x, y} : std::pair{y, x}; };
        const auto expected = gluing_involution(pg);
        for (const auto& [x, y] : expected.pairs()) want.insert(ordered(x, y));
        for (const auto& [x, y] : kappa.pairs()) have.insert(ordered(x, y));
        if (want != have) throw PreconditionError("involution", "involution does not match the pants graph");
    }
    const std::size_t l = pg.trinions, dim = 3 * l;
    RationalPolytope all(0);
    for (std::size_t j = 0; j < l; ++j) all = product(all, trinion);
    auto coord = [](std::size_t tri, std::size_t slot) { return 3 * tri + slot; };
    for (const auto& [x, y] : kappa.pairs()) {
        RationalVector a(dim, Rational(0));
        a[coord(x.first, x.second)] = 1;
        a[coord(y.first, y.second)] = -1;
        all.add_equality(a, 0);
    }
    std::vector<std::size_t> keep;
    for (const auto& s : pg.legs) keep.push_back(coord(s.trinion, s.index));
    for (const auto& e : pg.edges) keep.push_back(coord(e.primal.trinion, e.primal.index));
    auto out = fm_project(all, keep);
    if (!out.is_empty())
        check_invariant(out.affine_dimension() == static_cast<int>(keep.size()),
                        "goldman polytope is not full-dimensional in A^(b+r)");
    return out;
}

inline RationalPolytope goldman_polytope(const PantsGraph& pg) {
    return goldman_polytope(pg, trinion_polytope_su2(), gluing_involution(pg));
}

struct HolonomyWitness {
    std::size_t sample = 0;
    double achieved_class = 0.0;
};

struct HolonomyMcResult {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t successes = 0;
    double tolerance = 0.0;
    std::vector<HolonomyWitness> witnesses;  // first few successes

    double fraction() const { return samples ? static_cast<double>(successes) / static_cast<double>(samples) : 0.0; }
};

namespace detail {

struct Quaternion {
    double w = 1, x = 0, y = 0, z = 0;

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
};

/// Alcove coordinate of the conjugacy class of a unit quaternion: eigenvalues e^{±iπx}.
inline double su2_class(const Quaternion& q) { return std::acos(std::clamp(q.w, -1.0, 1.0)) / std::numbers::pi; }

/// Haar-random element of the SU(2) conjugacy class with alcove coordinate x.
template <class Rng>
Quaternion random_in_class(double x, Rng& rng) {
    std::normal_distribution<double> normal;
    double u[3], norm = 0;
    do {
        norm = 0;
        for (auto& c : u) c = normal(rng), norm += c * c;
    } while (norm < 1e-24);
    norm = std::sqrt(norm);
    const double s = std::sin(std::numbers::pi * x);
    return {std::cos(std::numbers::pi * x), s * u[0] / norm, s * u[1] / norm, s * u[2] / norm};
}

}  // namespace detail

/// Monte Carlo evidence that classes x_1..x_b admit d_j ∈ C_j with Π d_j = 1 in SU(2):
/// draws d_1..d_{b−1} at random and tests whether the product lies in class *x_b = x_b.
inline HolonomyMcResult holonomy_mc(std::size_t b, const std::vector<double>& class_points, std::size_t samples,
                                    std::uint64_t seed, double tolerance = 1e-3, std::size_t max_witnesses = 8) {
    if (b == 0 || class_points.size() != b)
        throw PreconditionError("classes", "need exactly b >= 1 class coordinates");
    if (samples == 0) throw PreconditionError("samples", "need at least one sample");
    for (double x : class_points)
        if (!(x >= 0.0 && x <= 1.0)) throw PreconditionError("classes", "class coordinate outside [0,1]");
    HolonomyMcResult r;
    r.seed = seed;
    r.samples = samples;
    r.tolerance = tolerance;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        detail::Quaternion p;
        for (std::size_t j = 0; j + 1 < b; ++j) p = p * detail::random_in_class(class_points[j], rng);
        const double achieved = detail::su2_class(p);
        if (std::abs(achieved - class_points[b - 1]) <= tolerance) {
            ++r.successes;
            if (r.witnesses.size() < max_witnesses) r.witnesses.push_back({s, achieved});
        }
    }
    return r;
}

/// Samples products d_1 d_2 of random elements from random classes and returns
/// the resulting (x_1, x_2, class of (d_1 d_2)^{-1}) triples.
inline std::vector<std::array<double, 3>> sample_trinion_triples(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::array<double, 3>> out;
    for (std::size_t s = 0; s < samples; ++s) {
        const double x = unit(rng), y = unit(rng);
        const auto p = detail::random_in_class(x, rng) * detail::random_in_class(y, rng);
        out.push_back({x, y, detail::su2_class(p)});
    }
    return out;
}

}  // namespace verlinde
