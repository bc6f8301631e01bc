#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "verlinde/lp.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

/// a · x ≤ b
struct Halfspace {
    RationalVector a;
    Rational b;

    bool satisfied_by(const RationalVector& x) const { return dot(a, x) <= b; }
    bool tight_at(const RationalVector& x) const { return dot(a, x) == b; }

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Scales a halfspace so that `a` is a primitive integer vector (b follows).
inline Halfspace normalize(Halfspace h) {
    BigInt l = 1;
    for (const auto& x : h.a) l = boost::multiprecision::lcm(l, denominator_of(x));
    BigInt g = 0;
    for (const auto& x : h.a) g = boost::multiprecision::gcd(g, numerator_of(x * l));
    if (g == 0) return h;
    const Rational f = Rational(l) / Rational(g);
    for (auto& x : h.a) x *= f;
    h.b *= f;
    return h;
}

/// H-representation {x : a_i · x ≤ b_i for all i} with exact rational data.
class RationalPolytope {
public:
    RationalPolytope() = default;
    explicit RationalPolytope(std::size_t dim, std::vector<Halfspace> hs = {}) : dim_(dim), hs_(std::move(hs)) {
        for (const auto& h : hs_)
            if (h.a.size() != dim_) throw PreconditionError("polytope", "halfspace dimension mismatch");
    }

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Halfspace>& halfspaces() const { return hs_; }

    void add(Halfspace h) {
        if (h.a.size() != dim_) throw PreconditionError("polytope", "halfspace dimension mismatch");
        hs_.push_back(std::move(h));
        empty_.reset();
    }
    void add_equality(const RationalVector& a, const Rational& b) {
        add({a, b});
        RationalVector neg(a);
        for (auto& x : neg) x = -x;
        add({std::move(neg), -b});
    }

    bool contains(const RationalVector& x) const {
        return std::all_of(hs_.begin(), hs_.end(), [&](const Halfspace& h) { return h.satisfied_by(x); });
    }
    /// Strictly inside every halfspace.
    bool contains_strictly(const RationalVector& x) const {
        return std::all_of(hs_.begin(), hs_.end(), [&](const Halfspace& h) { return dot(h.a, x) < h.b; });
    }

    lp::Result maximize(const RationalVector& c) const { return lp::maximize(c, rows(), rhs()); }

    bool is_empty() const {
        if (!empty_) empty_ = maximize(RationalVector(dim_, Rational(0))).status == lp::Status::infeasible;
        return *empty_;
    }

    /// Some x with A x + t ≤ b for t > 0 exists.
    bool has_interior() const {
        std::vector<RationalVector> a;
        RationalVector b;
        for (const auto& h : hs_) {
            auto row = h.a;
            row.push_back(1);
            a.push_back(std::move(row));
            b.push_back(h.b);
        }
        RationalVector cap(dim_ + 1, Rational(0));
        cap[dim_] = 1;
        a.push_back(cap);
        b.push_back(1);
        const auto r = lp::maximize(cap, a, b);
        return r.status == lp::Status::optimal && r.value > 0;
    }

    /// max over the polytope of c·x ≤ bound (vacuous for an empty polytope).
    bool implies(const Halfspace& h) const {
        const auto r = maximize(h.a);
        if (r.status == lp::Status::infeasible) return true;
        return r.status == lp::Status::optimal && r.value <= h.b;
    }

    bool is_subset_of(const RationalPolytope& other) const {
        return std::all_of(other.hs_.begin(), other.hs_.end(), [&](const Halfspace& h) { return implies(h); });
    }
    bool same_set(const RationalPolytope& other) const { return is_subset_of(other) && other.is_subset_of(*this); }

    RationalPolytope intersect(const RationalPolytope& other) const {
        if (other.dim_ != dim_) throw PreconditionError("polytope", "intersecting polytopes of different dimension");
        RationalPolytope out = *this;
        for (const auto& h : other.hs_) out.add(h);
        return out;
    }

    /// Constraints that hold with equality on the whole (nonempty) polytope.
    std::vector<std::size_t> implicit_equalities() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < hs_.size(); ++i) {
            RationalVector neg = hs_[i].a;
            for (auto& x : neg) x = -x;
            const auto r = maximize(neg);
            if (r.status == lp::Status::optimal && -r.value == hs_[i].b) out.push_back(i);
        }
        return out;
    }

    /// Dimension of the affine hull; −1 for the empty set.
    int affine_dimension() const {
        if (is_empty()) return -1;
        std::vector<RationalVector> eq;
        for (auto i : implicit_equalities()) eq.push_back(hs_[i].a);
        return static_cast<int>(dim_) - static_cast<int>(matrix_rank(eq));
    }

    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
        return a.dim_ == b.dim_ && a.hs_ == b.hs_;
    }

    /// Constraint matrix and right-hand side, in halfspace order.
    std::vector<RationalVector> rows() const {
        std::vector<RationalVector> a;
        for (const auto& h : hs_) a.push_back(h.a);
        return a;
    }
    RationalVector rhs() const {
        RationalVector b;
        for (const auto& h : hs_) b.push_back(h.b);
        return b;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Halfspace> hs_;
    mutable std::optional<bool> empty_;
};

inline RationalPolytope empty_polytope(std::size_t dim) {
    return RationalPolytope(dim, {Halfspace{RationalVector(dim, Rational(0)), Rational(-1)}});
}

/// Irredundant, normalized, sorted H-representation. An empty input yields
/// the single constraint 0 ≤ −1.
inline RationalPolytope canonicalize(const RationalPolytope& p) {
    const std::size_t dim = p.ambient_dim();
    // normalize and merge parallel constraints with the same direction
    std::map<RationalVector, Rational> tightest;
    for (const auto& h0 : p.halfspaces()) {
        Halfspace h = normalize(h0);
        const bool zero = std::all_of(h.a.begin(), h.a.end(), [](const Rational& x) { return x == 0; });
        if (zero) {
            if (h.b < 0) return empty_polytope(dim);
            continue;
        }
        auto [it, fresh] = tightest.emplace(h.a, h.b);
        if (!fresh && h.b < it->second) it->second = h.b;
    }
    std::vector<Halfspace> hs;
    for (auto& [a, b] : tightest) hs.push_back({a, b});
    RationalPolytope cur(dim, hs);
    if (cur.is_empty()) return empty_polytope(dim);

    for (std::size_t i = 0; i < hs.size();) {
        std::vector<Halfspace> others;
        for (std::size_t j = 0; j < hs.size(); ++j)
            if (j != i) others.push_back(hs[j]);
        if (RationalPolytope(dim, others).implies(hs[i]))
            hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    std::sort(hs.begin(), hs.end(), [](const Halfspace& x, const Halfspace& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return RationalPolytope(dim, std::move(hs));
}

/// Fourier–Motzkin projection onto the coordinates in `keep` (output order
/// follows `keep`). Eliminates the variable with the fewest new constraints
/// first and removes redundancy after every step.
inline RationalPolytope fm_project(const RationalPolytope& p, const std::vector<std::size_t>& keep) {
    const std::size_t dim = p.ambient_dim();
    std::vector<bool> kept(dim, false);
    for (auto k : keep) {
        if (k >= dim) throw PreconditionError("keep", "projection coordinate out of range");
        if (kept[k]) throw PreconditionError("keep", "projection coordinate listed twice");
        kept[k] = true;
    }
    RationalPolytope cur = canonicalize(p);
    std::vector<bool> alive(dim, true);
    for (;;) {
        if (cur.is_empty()) return empty_polytope(keep.size());
        std::size_t best = dim;
        std::size_t best_cost = 0;
        for (std::size_t v = 0; v < dim; ++v) {
            if (kept[v] || !alive[v]) continue;
            std::size_t pos = 0, neg = 0, zero = 0;
            for (const auto& h : cur.halfspaces()) (h.a[v] > 0 ? pos : h.a[v] < 0 ? neg : zero)++;
            const std::size_t cost = pos * neg + zero;
            if (best == dim || cost < best_cost) best = v, best_cost = cost;
        }
        if (best == dim) break;
        const std::size_t v = best;
        std::vector<Halfspace> pos, neg, next;
        for (const auto& h : cur.halfspaces()) {
            if (h.a[v] > 0)
                pos.push_back(h);
            else if (h.a[v] < 0)
                neg.push_back(h);
            else
                next.push_back(h);
        }
        for (const auto& hp : pos)
            for (const auto& hn : neg) {
                // hp/|hp_v| + hn/|hn_v| cancels x_v
                const Rational fp = 1 / hp.a[v], fn = -1 / hn.a[v];
                Halfspace c{RationalVector(dim), hp.b * fp + hn.b * fn};
                for (std::size_t j = 0; j < dim; ++j) c.a[j] = hp.a[j] * fp + hn.a[j] * fn;
                c.a[v] = 0;
                next.push_back(std::move(c));
            }
        alive[v] = false;
        cur = canonicalize(RationalPolytope(dim, std::move(next)));
    }
    std::vector<Halfspace> out;
    for (const auto& h : cur.halfspaces()) {
        Halfspace r{RationalVector(keep.size()), h.b};
        for (std::size_t k = 0; k < keep.size(); ++k) r.a[k] = h.a[keep[k]];
        out.push_back(std::move(r));
    }
    return canonicalize(RationalPolytope(keep.size(), std::move(out)));
}

/// Cartesian product: coordinates of `a` first, then `b`.
inline RationalPolytope product(const RationalPolytope& a, const RationalPolytope& b) {
    const std::size_t da = a.ambient_dim(), db = b.ambient_dim();
    RationalPolytope out(da + db);
    for (const auto& h : a.halfspaces()) {
        Halfspace e{RationalVector(da + db, Rational(0)), h.b};
        std::copy(h.a.begin(), h.a.end(), e.a.begin());
        out.add(std::move(e));
    }
    for (const auto& h : b.halfspaces()) {
        Halfspace e{RationalVector(da + db, Rational(0)), h.b};
        std::copy(h.a.begin(), h.a.end(), e.a.begin() + static_cast<std::ptrdiff_t>(da));
        out.add(std::move(e));
    }
    return out;
}

}  // namespace verlinde
