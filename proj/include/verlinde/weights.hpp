#pragma once

#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "verlinde/root_system.hpp"

namespace verlinde {

struct SignedWeight {
    Weight weight;
    int sign = 1;  ///< (−1)^length of the Weyl element applied

    friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
};

/// Reflects `w` into the dominant chamber by simple reflections.
inline SignedWeight dominant_representative(const RootSystem& rs, Weight w) {
    int sign = 1;
    for (;;) {
        std::size_t i = 0;
        while (i < w.rank() && w[i] >= 0) ++i;
        if (i == w.rank()) return {std::move(w), sign};
        w = rs.reflect(w, i);
        sign = -sign;
    }
}

inline std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (cur[i] == 0) continue;
            Weight next = rs.reflect(cur, i);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return seen;
}

/// A Weyl group element as an integer matrix acting on fundamental-weight coordinates.
struct WeylElement {
    std::vector<std::vector<std::int64_t>> matrix;  // (wλ)_j = Σ_k matrix[j][k] λ_k
    int sign = 1;
    std::size_t length = 0;

    Weight apply(const Weight& w) const {
        Weight out = Weight::zero(w.rank());
        for (std::size_t j = 0; j < w.rank(); ++j)
            for (std::size_t k = 0; k < w.rank(); ++k) out[j] += matrix[j][k] * w[k];
        return out;
    }
};

/// Enumerates W by breadth-first search over reduced words. Elements are
/// keyed by their action on ρ, which is regular, so the map is injective.
inline std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::size_t limit = 100000) {
    const std::size_t n = rs.rank();
    WeylElement id;
    id.matrix.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id.matrix[i][i] = 1;

    std::map<Weight, std::size_t> index;
    std::vector<WeylElement> out{id};
    index.emplace(rs.rho(), 0);
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (std::size_t i = 0; i < n; ++i) {
            // s_i · w: reflect each column image
            WeylElement next;
            next.matrix = out[head].matrix;
            for (std::size_t k = 0; k < n; ++k) {
                Weight col = Weight::zero(n);
                for (std::size_t j = 0; j < n; ++j) col[j] = next.matrix[j][k];
                col = rs.reflect(col, i);
                for (std::size_t j = 0; j < n; ++j) next.matrix[j][k] = col[j];
            }
            const Weight key = next.apply(rs.rho());
            if (index.count(key)) continue;
            next.sign = -out[head].sign;
            next.length = out[head].length + 1;
            index.emplace(key, out.size());
            out.push_back(std::move(next));
            if (out.size() > limit)
                throw PreconditionError("group", "Weyl group of " + rs.label.str() + " exceeds enumeration limit");
        }
    }
    return out;
}

/// Weyl dimension formula Π_{α>0} (λ+ρ, α) / (ρ, α).
inline BigInt weyl_dim(const RootSystem& rs, const Weight& w) {
    if (!w.is_dominant()) throw PreconditionError("weight", "weyl_dim: weight " + w.str() + " is not dominant");
    const auto shifted = RootSystem::to_rational(w + rs.rho());
    const auto rho = RootSystem::to_rational(rs.rho());
    Rational d = 1;
    for (const auto& root : rs.positive_roots)
        d *= rs.pair_with_root(shifted, root.simple_coords) / rs.pair_with_root(rho, root.simple_coords);
    check_invariant(is_integer(d), "weyl_dim: non-integral dimension");
    return numerator_of(d);
}

using WeightMultiplicities = std::map<Weight, std::int64_t>;

namespace detail {

inline std::int64_t depth_below(const RootSystem& rs, const Weight& top, const Weight& w) {
    std::int64_t h = 0;
    for (auto c : rs.to_simple_coords(top - w)) h += c;
    return h;
}

/// Dominant weights μ ≤ λ. Dominance order on dominant weights is generated
/// by subtracting positive roots, so a search from λ reaches all of them.
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& top) {
    std::set<Weight> seen{top};
    std::deque<Weight> queue{top};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& root : rs.positive_roots) {
            Weight next = cur - root.weight;
            if (next.is_dominant() && seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        return depth_below(rs, top, a) < depth_below(rs, top, b);
    });
    return out;
}

}  // namespace detail

/// Multiplicities of the dominant weights of V_λ by Freudenthal's recursion.
inline WeightMultiplicities dominant_multiplicities(const RootSystem& rs, const Weight& top) {
    if (!top.is_dominant()) throw PreconditionError("weight", "weight " + top.str() + " is not dominant");
    const auto dominant = detail::dominant_weights_below(rs, top);
    const std::set<Weight> support(dominant.begin(), dominant.end());
    WeightMultiplicities mult;
    const Weight rho = rs.rho();
    const Rational top_norm = rs.inner(top + rho, top + rho);

    for (const auto& mu : dominant) {
        if (mu == top) {
            mult[mu] = 1;
            continue;
        }
        Rational sum = 0;
        for (const auto& root : rs.positive_roots) {
            Weight shifted = mu;
            for (;;) {
                shifted += root.weight;
                const Weight rep = dominant_representative(rs, shifted).weight;
                if (!support.count(rep)) break;
                const auto it = mult.find(rep);
                check_invariant(it != mult.end(), "freudenthal: higher weight not yet computed");
                sum += Rational(it->second) * rs.pair_with_root(RootSystem::to_rational(shifted), root.simple_coords);
            }
        }
        const Rational denom = top_norm - rs.inner(mu + rho, mu + rho);
        check_invariant(denom > 0, "freudenthal: non-positive denominator");
        const Rational m = 2 * sum / denom;
        mult[mu] = to_int64(m);
    }
    return mult;
}

/// All weights of V_λ with multiplicities (W-orbits of the dominant ones).
inline WeightMultiplicities weight_multiplicities(const RootSystem& rs, const Weight& top) {
    WeightMultiplicities out;
    for (const auto& [mu, m] : dominant_multiplicities(rs, top)) {
        if (m == 0) continue;
        for (const auto& w : weyl_orbit(rs, mu)) out.emplace(w, m);
    }
    return out;
}

/// Racah–Speiser decomposition of V_a ⊗ V_b into irreducibles (dominant highest weight → multiplicity).
inline std::map<Weight, std::int64_t> tensor_decompose(const RootSystem& rs, const Weight& a, const Weight& b) {
    if (!a.is_dominant()) throw PreconditionError("weight", "tensor_decompose: " + a.str() + " is not dominant");
    if (!b.is_dominant()) throw PreconditionError("weight", "tensor_decompose: " + b.str() + " is not dominant");
    const Weight rho = rs.rho();
    std::map<Weight, std::int64_t> acc;
    for (const auto& [mu, m] : weight_multiplicities(rs, b)) {
        const auto [rep, sign] = dominant_representative(rs, a + mu + rho);
        if (!rep.is_regular_dominant()) continue;
        acc[rep - rho] += sign * m;
    }
    std::map<Weight, std::int64_t> out;
    for (const auto& [w, m] : acc) {
        check_invariant(m >= 0, "tensor_decompose: negative multiplicity for " + w.str());
        if (m > 0) out.emplace(w, m);
    }
    return out;
}

}  // namespace verlinde
