#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "verlinde/affine.hpp"

namespace verlinde {

namespace detail {

/// Folds every summand of V_a ⊗ V_b to level k and accumulates the signs.
inline std::map<Weight, std::int64_t> folded_product(const RootSystem& rs, const Weight& a, const Weight& b,
                                                     std::int64_t level) {
    std::map<Weight, std::int64_t> acc;
    for (const auto& [lambda, m] : tensor_decompose(rs, a, b)) {
        if (auto f = affine_fold(rs, lambda, level)) acc[f->weight] += f->sign * m;
    }
    for (const auto& [w, n] : acc)
        check_invariant(n >= 0, "fusion: negative accumulated coefficient at " + w.str() + " for " + a.str() + " x " +
                                    b.str() + ", level " + std::to_string(level));
    return acc;
}

}  // namespace detail

/// N^k_{μ,ν;α}: multiplicity of α in the level-k fusion product of μ and ν.
inline std::int64_t fusion_coefficient(const RootSystem& rs, const Weight& mu, const Weight& nu, const Weight& alpha,
                                       std::int64_t level) {
    const LevelWeight m(rs, level, mu), n(rs, level, nu), a(rs, level, alpha);
    const auto acc = detail::folded_product(rs, m.weight(), n.weight(), level);
    const auto it = acc.find(a.weight());
    return it == acc.end() ? 0 : it->second;
}

/// All fusion coefficients at one level, indexed by the order of level_weights().
class FusionTable {
public:
    FusionTable(RootSystem rs, std::int64_t level, std::vector<LevelWeight> labels, std::vector<std::int64_t> coeffs)
        : rs_(std::move(rs)), level_(level), labels_(std::move(labels)), coeffs_(std::move(coeffs)) {
        const auto n = labels_.size();
        check_invariant(coeffs_.size() == n * n * n, "fusion table: coefficient array has wrong size");
        for (std::size_t i = 0; i < n; ++i) index_.emplace(labels_[i].weight(), i);
        dual_.resize(n);
        for (std::size_t i = 0; i < n; ++i) dual_[i] = index_.at(dual_weight(rs_, labels_[i].weight()));
        zero_ = index_.at(Weight::zero(rs_.rank()));
    }

    const RootSystem& root_system() const { return rs_; }
    std::int64_t level() const { return level_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<LevelWeight>& labels() const { return labels_; }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    std::size_t zero_index() const { return zero_; }
    std::size_t dual_index(std::size_t i) const { return dual_[i]; }

    std::optional<std::size_t> find(const Weight& w) const {
        const auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const Weight& w) const {
        if (auto i = find(w)) return *i;
        throw PreconditionError("label", "label " + w.str() + " is not admissible at level " + std::to_string(level_));
    }

    /// N_{labels[i], labels[j]; labels[l]}
    std::int64_t operator()(std::size_t i, std::size_t j, std::size_t l) const {
        return coeffs_[(i * size() + j) * size() + l];
    }

    /// Copy with one coefficient overwritten (no checks); for fault injection.
    FusionTable with_coefficient(std::size_t i, std::size_t j, std::size_t l, std::int64_t value) const {
        FusionTable t = *this;
        t.coeffs_[(i * size() + j) * size() + l] = value;
        return t;
    }

private:
    RootSystem rs_;
    std::int64_t level_;
    std::vector<LevelWeight> labels_;
    std::vector<std::int64_t> coeffs_;
    std::map<Weight, std::size_t> index_;
    std::vector<std::size_t> dual_;
    std::size_t zero_ = 0;
};

struct AxiomCounterexample {
    std::string axiom;
    std::vector<Weight> labels;
    std::string detail;
};

struct FusionAxiomReport {
    bool symmetry = true;
    bool unit = true;
    bool duality = true;
    bool associativity = true;
    std::vector<AxiomCounterexample> counterexamples;  // first failure per axiom

    bool all() const { return symmetry && unit && duality && associativity; }
};

/// Checks commutativity, duality, the unit axioms and associativity
/// Σ_α N_{μ,α;ν} N_{β,ρ;α} = Σ_α N_{μ,β;α} N_{α,ρ;ν}.
inline FusionAxiomReport verify_fusion_axioms(const FusionTable& t) {
    FusionAxiomReport rep;
    const std::size_t n = t.size();
    auto w = [&](std::size_t i) { return t.labels()[i].weight(); };
    auto fail = [&](bool& flag, const std::string& axiom, std::vector<Weight> labels, std::string detail) {
        if (!flag) return;
        flag = false;
        rep.counterexamples.push_back({axiom, std::move(labels), std::move(detail)});
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                if (t(i, j, l) != t(j, i, l))
                    fail(rep.symmetry, "symmetry", {w(i), w(j), w(l)}, "N_{a,b;c} != N_{b,a;c}");
                if (t(i, j, l) != t(t.dual_index(i), t.dual_index(j), t.dual_index(l)))
                    fail(rep.duality, "duality", {w(i), w(j), w(l)}, "N_{a,b;c} != N_{*a,*b;*c}");
            }

    const std::size_t z = t.zero_index();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t delta = i == j ? 1 : 0;
            if (t(i, t.dual_index(j), z) != delta)
                fail(rep.unit, "unit", {w(i), w(j)}, "N_{a,*b;0} != delta_{a,b}");
            if (t(i, z, j) != delta) fail(rep.unit, "unit", {w(i), w(j)}, "N_{a,0;b} != delta_{a,b}");
        }

    for (std::size_t b = 0; b < n && rep.associativity; ++b)
        for (std::size_t r = 0; r < n && rep.associativity; ++r)
            for (std::size_t m = 0; m < n && rep.associativity; ++m)
                for (std::size_t v = 0; v < n; ++v) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (std::size_t a = 0; a < n; ++a) {
                        lhs += t(m, a, v) * t(b, r, a);
                        rhs += t(m, b, a) * t(a, r, v);
                    }
                    if (lhs != rhs) {
                        fail(rep.associativity, "associativity", {w(m), w(b), w(r), w(v)},
                             "mu*(beta*rho) and (mu*beta)*rho differ at nu: " + std::to_string(lhs) + " vs " +
                                 std::to_string(rhs));
                        break;
                    }
                }
    return rep;
}

/// Builds the dense table; rows are distributed over `threads` workers.
inline FusionTable build_fusion_table(const RootSystem& rs, std::int64_t level, unsigned threads = 1,
                                      bool verify = true) {
    auto labels = level_weights(rs, level);
    const std::size_t n = labels.size();
    std::vector<std::int64_t> coeffs(n * n * n, 0);
    std::map<Weight, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(labels[i].weight(), i);

    auto row = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [w, c] : detail::folded_product(rs, labels[i].weight(), labels[j].weight(), level))
                coeffs[(i * n + j) * n + index.at(w)] = c;
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) row(i);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < n; i += threads) row(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    FusionTable table(rs, level, std::move(labels), std::move(coeffs));
    if (verify) {
        const auto report = verify_fusion_axioms(table);
        if (!report.all()) {
            const auto& ce = report.counterexamples.front();
            throw InvariantError("fusion table violates " + ce.axiom + ": " + ce.detail);
        }
    }
    return table;
}

/// T(a,b,c) = N_{a,b;*c}: the value attached to a three-holed sphere with markings a, b, c.
inline std::int64_t trinion_value(const FusionTable& t, std::size_t a, std::size_t b, std::size_t c) {
    return t(a, b, t.dual_index(c));
}

inline std::int64_t trinion_value(const FusionTable& t, const LevelWeight& a, const LevelWeight& b,
                                  const LevelWeight& c) {
    for (const auto* w : {&a, &b, &c})
        if (w->level() != t.level())
            throw PreconditionError("label", "label " + w->weight().str() + " is at level " +
                                                 std::to_string(w->level()) + ", table is at level " +
                                                 std::to_string(t.level()));
    return trinion_value(t, t.index_of(a.weight()), t.index_of(b.weight()), t.index_of(c.weight()));
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// (N_μ)[α][β] = N_{μ,β;α}.
inline IntMatrix fusion_matrix(const FusionTable& t, std::size_t mu) {
    const std::size_t n = t.size();
    IntMatrix m(n, std::vector<std::int64_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m[a][b] = t(mu, b, a);
    return m;
}

inline IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
    const std::size_t n = x.size();
    IntMatrix out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (x[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
        }
    return out;
}

}  // namespace verlinde
