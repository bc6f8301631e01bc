#pragma once

#include <optional>
#include <vector>

#include "verlinde/weights.hpp"

namespace verlinde {

/// A dominant weight admissible at level k: <λ, θ^∨> ≤ k.
class LevelWeight {
public:
    LevelWeight(const RootSystem& rs, std::int64_t level, Weight weight) : level_(level), weight_(std::move(weight)) {
        if (level < 1) throw PreconditionError("level", "level must be positive, got " + std::to_string(level));
        if (weight_.rank() != rs.rank())
            throw PreconditionError("weight", "weight " + weight_.str() + " has wrong rank for " + rs.label.str());
        if (!weight_.is_dominant() || rs.level_of(weight_) > level)
            throw PreconditionError("weight", "label " + weight_.str() + " is not admissible at level " +
                                                  std::to_string(level));
    }

    std::int64_t level() const { return level_; }
    const Weight& weight() const { return weight_; }

    friend bool operator==(const LevelWeight&, const LevelWeight&) = default;
    friend auto operator<=>(const LevelWeight& a, const LevelWeight& b) {
        if (auto c = a.level_ <=> b.level_; c != 0) return c;
        return a.weight_ <=> b.weight_;
    }

private:
    std::int64_t level_;
    Weight weight_;
};

/// Dominant weights with <μ, θ^∨> ≤ k, lexicographic on coordinates.
inline std::vector<LevelWeight> level_weights(const RootSystem& rs, std::int64_t level) {
    if (level < 1) throw PreconditionError("level", "level must be positive, got " + std::to_string(level));
    std::vector<LevelWeight> out;
    Weight w = Weight::zero(rs.rank());
    // Odometer over coordinates, last index fastest; pruned by the level bound.
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t budget) {
        if (i == rs.rank()) {
            out.emplace_back(rs, level, w);
            return;
        }
        for (std::int64_t c = 0; c * rs.comarks[i] <= budget; ++c) {
            w[i] = c;
            rec(i + 1, budget - c * rs.comarks[i]);
        }
        w[i] = 0;
    };
    rec(0, level);
    return out;
}

/// *λ = −w₀λ, the highest weight of the dual representation.
inline Weight dual_weight(const RootSystem& rs, const Weight& w) {
    if (!w.is_dominant()) throw PreconditionError("weight", "dual_weight: " + w.str() + " is not dominant");
    return dominant_representative(rs, -w).weight;
}

inline LevelWeight dual_weight(const RootSystem& rs, const LevelWeight& w) {
    return LevelWeight(rs, w.level(), dual_weight(rs, w.weight()));
}

struct FoldResult {
    int sign;
    Weight weight;  ///< admissible at the folding level
};

/// Kac–Walton folding: applies the ρ-shifted action of the affine Weyl group
/// at level k + h^∨. Returns nothing when w + ρ lies on a wall.
inline std::optional<FoldResult> affine_fold(const RootSystem& rs, const Weight& w, std::int64_t level) {
    if (level < 1) throw PreconditionError("level", "level must be positive, got " + std::to_string(level));
    const std::int64_t shifted_level = level + rs.dual_coxeter;
    Weight x = w + rs.rho();
    int sign = 1;
    for (;;) {
        auto [rep, s] = dominant_representative(rs, x);
        sign *= s;
        if (!rep.is_regular_dominant()) return std::nullopt;
        const std::int64_t l = rs.level_of(rep);
        if (l == shifted_level) return std::nullopt;
        if (l < shifted_level) return FoldResult{sign, rep - rs.rho()};
        // affine reflection across <x, θ^∨> = k + h^∨
        x = rep - (l - shifted_level) * rs.theta;
        sign = -sign;
    }
}

/// A face of the fundamental alcove, given by its set of vanishing walls.
/// Wall 0 is the affine wall <x, θ> = 1; wall i ≥ 1 is the simple wall x_{i} = 0
/// (coordinates are in the fundamental-weight basis, scaled to level 1).
struct AlcoveFace {
    std::vector<bool> vanishing_walls;  // size rank + 1
    RationalVector representative;

    std::size_t codim() const {
        return static_cast<std::size_t>(std::count(vanishing_walls.begin(), vanishing_walls.end(), true));
    }
    friend bool operator==(const AlcoveFace&, const AlcoveFace&) = default;
};

/// Vertex j of the alcove: 0 for j = 0, ω_j / a_j^∨ otherwise. Vertex j lies on every wall except wall j.
inline RationalVector alcove_vertex(const RootSystem& rs, std::size_t j) {
    RationalVector v(rs.rank(), Rational(0));
    if (j > 0) v[j - 1] = Rational(1, rs.comarks[j - 1]);
    return v;
}

/// Value of wall j's defining functional minus its bound: >0 strictly inside, 0 on the wall.
inline Rational alcove_wall_slack(const RootSystem& rs, std::size_t wall, const RationalVector& x) {
    if (wall > 0) return x[wall - 1];
    Rational s = 1;
    for (std::size_t i = 0; i < rs.rank(); ++i) s -= Rational(rs.comarks[i]) * x[i];
    return s;
}

inline AlcoveFace make_alcove_face(const RootSystem& rs, std::vector<bool> walls) {
    if (walls.size() != rs.rank() + 1)
        throw PreconditionError("face", "face needs " + std::to_string(rs.rank() + 1) + " wall flags");
    AlcoveFace f;
    f.vanishing_walls = std::move(walls);
    if (f.codim() > rs.rank()) throw PreconditionError("face", "all walls vanishing: empty face");
    f.representative.assign(rs.rank(), Rational(0));
    std::size_t count = 0;
    for (std::size_t j = 0; j <= rs.rank(); ++j) {
        if (f.vanishing_walls[j]) continue;
        const auto v = alcove_vertex(rs, j);
        for (std::size_t i = 0; i < rs.rank(); ++i) f.representative[i] += v[i];
        ++count;
    }
    for (auto& x : f.representative) x /= count;
    return f;
}

/// All faces of the alcove, ordered by codimension then by wall pattern.
inline std::vector<AlcoveFace> alcove_faces(const RootSystem& rs) {
    const std::size_t walls = rs.rank() + 1;
    std::vector<AlcoveFace> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << walls); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > rs.rank()) continue;
        std::vector<bool> w(walls);
        for (std::size_t j = 0; j < walls; ++j) w[j] = (mask >> j) & 1;
        out.push_back(make_alcove_face(rs, std::move(w)));
    }
    std::stable_sort(out.begin(), out.end(), [](const AlcoveFace& a, const AlcoveFace& b) {
        if (a.codim() != b.codim()) return a.codim() < b.codim();
        return a.vanishing_walls > b.vanishing_walls;
    });
    return out;
}

/// dim of the centralizer of exp(2πξ): rank + #{roots α : (α, ξ) ∈ ℤ}.
inline std::size_t face_centralizer_dim(const RootSystem& rs, const AlcoveFace& face) {
    std::size_t integral = 0;
    for (const auto& root : rs.positive_roots)
        if (is_integer(rs.pair_with_root(face.representative, root.simple_coords))) ++integral;
    return rs.rank() + 2 * integral;
}

}  // namespace verlinde
