#pragma once

#include <Eigen/Dense>

#include <cstdio>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "verlinde/fusion.hpp"

namespace verlinde {

/// A closed marked surface: genus plus one label per boundary circle, all at one level.
struct MarkedSurface {
    std::int64_t genus = 0;
    std::vector<LevelWeight> markings;

    MarkedSurface(std::int64_t g, std::vector<LevelWeight> m) : genus(g), markings(std::move(m)) {
        if (g < 0) throw PreconditionError("genus", "genus must be nonnegative");
        for (const auto& w : markings)
            if (w.level() != markings.front().level())
                throw PreconditionError("markings", "markings must share one level");
    }
    std::size_t boundary() const { return markings.size(); }
};

/// One of the three boundary circles of a trinion.
struct Slot {
    std::size_t trinion = 0;
    std::size_t index = 0;  // 0, 1 or 2

    friend bool operator==(const Slot&, const Slot&) = default;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// An internal gluing circle. The `primal` side carries a label μ, the `dual` side carries *μ.
struct GluedEdge {
    Slot primal;
    Slot dual;
};

/// A pants decomposition as a trivalent graph: trinions, glued circles, and
/// external legs listed in the order of the surface's markings.
struct PantsGraph {
    std::size_t trinions = 0;
    std::vector<GluedEdge> edges;
    std::vector<Slot> legs;

    std::size_t components() const {
        std::vector<std::size_t> parent(trinions);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = root(parent[x]);
        };
        for (const auto& e : edges) parent[root(e.primal.trinion)] = root(e.dual.trinion);
        std::size_t c = 0;
        for (std::size_t i = 0; i < trinions; ++i) c += root(i) == i;
        return c;
    }

    /// Sum of genera of the components: first Betti number of the graph.
    std::int64_t genus() const {
        return static_cast<std::int64_t>(edges.size()) - static_cast<std::int64_t>(trinions) +
               static_cast<std::int64_t>(components());
    }

    /// Every slot is used exactly once.
    void validate() const {
        std::vector<int> used(3 * trinions, 0);
        auto mark = [&](const Slot& s) {
            if (s.trinion >= trinions || s.index > 2)
                throw PreconditionError("graph", "pants graph references a nonexistent slot");
            ++used[3 * s.trinion + s.index];
        };
        for (const auto& e : edges) mark(e.primal), mark(e.dual);
        for (const auto& l : legs) mark(l);
        for (int u : used)
            if (u != 1) throw PreconditionError("graph", "pants graph slot used " + std::to_string(u) + " times");
    }

    std::string serialize() const {
        std::ostringstream os;
        os << "l=" << trinions << ";e=";
        for (const auto& e : edges)
            os << e.primal.trinion << '.' << e.primal.index << '-' << e.dual.trinion << '.' << e.dual.index << ',';
        os << ";legs=";
        for (const auto& s : legs) os << s.trinion << '.' << s.index << ',';
        return os.str();
    }

    /// FNV-1a of the serialized graph, as 16 hex digits.
    std::string hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : serialize()) h = (h ^ c) * 0x100000001b3ULL;
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

inline void require_stable(std::int64_t g, std::int64_t b) {
    if (g < 0 || b < 0) throw PreconditionError("genus", "genus and boundary count must be nonnegative");
    if ((g == 0 && b <= 2) || (g == 1 && b == 0))
        throw PreconditionError("genus", "surface (g=" + std::to_string(g) + ", b=" + std::to_string(b) +
                                             ") has no pants decomposition");
}

/// Canonical decomposition: a path of 2g−2+b−g trinions whose free circles carry
/// first the g handles (trinions with a self-glued pair of circles) and then the b legs.
inline PantsGraph pants_graph(std::int64_t genus, std::int64_t boundary) {
    require_stable(genus, boundary);
    const auto g = static_cast<std::size_t>(genus);
    const auto b = static_cast<std::size_t>(boundary);
    PantsGraph pg;
    std::vector<Slot> free_slots;
    const std::size_t path = g + b >= 3 ? g + b - 2 : 0;
    pg.trinions = path + g;

    for (std::size_t h = 0; h < g; ++h) pg.edges.push_back({{path + h, 0}, {path + h, 1}});
    if (path > 0) {
        free_slots.push_back({0, 0});
        for (std::size_t p = 0; p < path; ++p) free_slots.push_back({p, 2});
        free_slots.push_back({path - 1, 1});
        for (std::size_t h = 0; h < g; ++h) pg.edges.push_back({free_slots[h], {path + h, 2}});
        for (std::size_t p = 0; p + 1 < path; ++p) pg.edges.push_back({{p, 1}, {p + 1, 0}});
        for (std::size_t i = g; i < free_slots.size(); ++i) pg.legs.push_back(free_slots[i]);
    } else if (g == 2) {
        pg.edges.push_back({{0, 2}, {1, 2}});
    } else {
        pg.legs.push_back({0, 2});  // one-holed torus
    }
    pg.validate();
    check_invariant(pg.trinions == 2 * g + b - 2 && pg.edges.size() == 3 * g + b - 3,
                    "pants_graph: wrong trinion or edge count");
    check_invariant(pg.genus() == genus && pg.components() == 1, "pants_graph: wrong topology");
    return pg;
}

/// Elementary move across an internal circle joining two distinct trinions:
/// one circle of each trinion trades places. Topology is unchanged.
inline std::optional<PantsGraph> flip(const PantsGraph& pg, std::size_t edge) {
    const auto& e = pg.edges.at(edge);
    if (e.primal.trinion == e.dual.trinion) return std::nullopt;
    auto other = [](const Slot& s, bool last) {
        std::size_t found = 3;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != s.index) {
                found = i;
                if (!last) break;
            }
        return Slot{s.trinion, found};
    };
    const Slot x = other(e.primal, true), y = other(e.dual, false);
    auto swap_slot = [&](Slot& s) {
        if (s == x)
            s = y;
        else if (s == y)
            s = x;
    };
    PantsGraph out = pg;
    for (auto& ge : out.edges) swap_slot(ge.primal), swap_slot(ge.dual);
    for (auto& l : out.legs) swap_slot(l);
    out.validate();
    return out;
}

/// Decompositions reachable from `start` by flips, breadth-first, at most `limit`.
inline std::vector<PantsGraph> related_decompositions(const PantsGraph& start, std::size_t limit) {
    std::vector<PantsGraph> out{start};
    std::set<std::string> seen{start.serialize()};
    for (std::size_t head = 0; head < out.size() && out.size() < limit; ++head)
        for (std::size_t e = 0; e < out[head].edges.size() && out.size() < limit; ++e)
            if (auto next = flip(out[head], e))
                if (seen.insert(next->serialize()).second) out.push_back(*next);
    return out;
}

/// Cuts one internal circle; its primal and dual sides become two new legs (appended in that order).
inline PantsGraph split_along_edge(const PantsGraph& pg, std::size_t edge) {
    PantsGraph out = pg;
    const GluedEdge e = out.edges.at(edge);
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge));
    out.legs.push_back(e.primal);
    out.legs.push_back(e.dual);
    return out;
}

/// Swaps which side of one circle carries the dual label.
inline PantsGraph swap_edge_side(const PantsGraph& pg, std::size_t edge) {
    PantsGraph out = pg;
    std::swap(out.edges.at(edge).primal, out.edges.at(edge).dual);
    return out;
}

namespace detail {

struct Factor {
    std::vector<std::size_t> vars;  // sorted edge ids
    std::vector<BigInt> values;     // index Σ assign[i] N^i
};

inline std::size_t ipow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

// What sits at each slot: a fixed label or an edge variable (primal or dual side).
struct SlotBinding {
    bool is_leg = false;
    std::size_t label = 0;
    std::size_t edge = 0;
    bool dual = false;
};

inline std::vector<SlotBinding> bind_slots(const PantsGraph& pg, const std::vector<std::size_t>& leg_labels) {
    std::vector<SlotBinding> slots(3 * pg.trinions);
    for (std::size_t e = 0; e < pg.edges.size(); ++e) {
        slots[3 * pg.edges[e].primal.trinion + pg.edges[e].primal.index] = {false, 0, e, false};
        slots[3 * pg.edges[e].dual.trinion + pg.edges[e].dual.index] = {false, 0, e, true};
    }
    for (std::size_t i = 0; i < pg.legs.size(); ++i)
        slots[3 * pg.legs[i].trinion + pg.legs[i].index] = {true, leg_labels[i], 0, false};
    return slots;
}

inline std::size_t slot_label(const FusionTable& t, const SlotBinding& s, const std::vector<std::size_t>& edge_label) {
    if (s.is_leg) return s.label;
    const std::size_t mu = edge_label[s.edge];
    return s.dual ? t.dual_index(mu) : mu;
}

}  // namespace detail

/// Σ over labelings of internal circles of Π over trinions of T(labels), by
/// variable elimination. The graph may be disconnected.
inline BigInt evaluate_graph(const FusionTable& t, const PantsGraph& pg, const std::vector<std::size_t>& leg_labels) {
    pg.validate();
    if (leg_labels.size() != pg.legs.size())
        throw PreconditionError("markings", "expected " + std::to_string(pg.legs.size()) + " markings, got " +
                                                std::to_string(leg_labels.size()));
    const std::size_t n = t.size();
    const auto slots = detail::bind_slots(pg, leg_labels);

    std::vector<detail::Factor> factors;
    std::vector<std::size_t> edge_label(pg.edges.size(), 0);
    for (std::size_t tri = 0; tri < pg.trinions; ++tri) {
        detail::Factor f;
        for (std::size_t s = 0; s < 3; ++s)
            if (!slots[3 * tri + s].is_leg) f.vars.push_back(slots[3 * tri + s].edge);
        std::sort(f.vars.begin(), f.vars.end());
        f.vars.erase(std::unique(f.vars.begin(), f.vars.end()), f.vars.end());
        const std::size_t size = detail::ipow(n, f.vars.size());
        f.values.resize(size);
        for (std::size_t idx = 0; idx < size; ++idx) {
            std::size_t rest = idx;
            for (auto v : f.vars) edge_label[v] = rest % n, rest /= n;
            const auto a = detail::slot_label(t, slots[3 * tri], edge_label);
            const auto b = detail::slot_label(t, slots[3 * tri + 1], edge_label);
            const auto c = detail::slot_label(t, slots[3 * tri + 2], edge_label);
            f.values[idx] = trinion_value(t, a, b, c);
        }
        factors.push_back(std::move(f));
    }

    std::vector<bool> eliminated(pg.edges.size(), false);
    for (std::size_t step = 0; step < pg.edges.size(); ++step) {
        // Greedy: eliminate the circle whose joint factor is smallest; ties in graph order.
        std::size_t best = pg.edges.size(), best_width = SIZE_MAX;
        for (std::size_t e = 0; e < pg.edges.size(); ++e) {
            if (eliminated[e]) continue;
            std::set<std::size_t> uni;
            for (const auto& f : factors)
                if (std::binary_search(f.vars.begin(), f.vars.end(), e)) uni.insert(f.vars.begin(), f.vars.end());
            if (uni.size() < best_width) best_width = uni.size(), best = e;
        }
        const std::size_t e = best;
        eliminated[e] = true;

        std::vector<detail::Factor> involved, kept;
        for (auto& f : factors)
            (std::binary_search(f.vars.begin(), f.vars.end(), e) ? involved : kept).push_back(std::move(f));
        std::set<std::size_t> uni;
        for (const auto& f : involved) uni.insert(f.vars.begin(), f.vars.end());
        uni.erase(e);

        detail::Factor out;
        out.vars.assign(uni.begin(), uni.end());
        const std::size_t size = detail::ipow(n, out.vars.size());
        out.values.assign(size, BigInt(0));
        // strides of each involved factor with respect to out.vars and e
        std::vector<std::vector<std::size_t>> strides(involved.size());
        std::vector<std::size_t> e_stride(involved.size(), 0);
        for (std::size_t fi = 0; fi < involved.size(); ++fi) {
            strides[fi].assign(out.vars.size(), 0);
            std::size_t s = 1;
            for (auto v : involved[fi].vars) {
                if (v == e)
                    e_stride[fi] = s;
                else
                    strides[fi][static_cast<std::size_t>(
                        std::lower_bound(out.vars.begin(), out.vars.end(), v) - out.vars.begin())] = s;
                s *= n;
            }
        }
        std::vector<std::size_t> base(involved.size());
        BigInt prod;
        for (std::size_t idx = 0; idx < size; ++idx) {
            std::size_t rest = idx;
            std::fill(base.begin(), base.end(), 0);
            for (std::size_t k = 0; k < out.vars.size(); ++k) {
                const std::size_t digit = rest % n;
                rest /= n;
                for (std::size_t fi = 0; fi < involved.size(); ++fi) base[fi] += digit * strides[fi][k];
            }
            BigInt& acc = out.values[idx];
            for (std::size_t x = 0; x < n; ++x) {
                prod = 1;
                for (std::size_t fi = 0; fi < involved.size() && prod != 0; ++fi)
                    prod *= involved[fi].values[base[fi] + x * e_stride[fi]];
                acc += prod;
            }
        }
        kept.push_back(std::move(out));
        factors = std::move(kept);
    }

    BigInt result = 1;
    for (const auto& f : factors) {
        check_invariant(f.vars.empty() && f.values.size() == 1, "evaluate_graph: factor left with free variables");
        result *= f.values[0];
    }
    return result;
}

/// Oracle: full enumeration over all N^r labelings of internal circles.
inline BigInt evaluate_graph_naive(const FusionTable& t, const PantsGraph& pg,
                                   const std::vector<std::size_t>& leg_labels) {
    pg.validate();
    const std::size_t n = t.size(), r = pg.edges.size();
    const auto slots = detail::bind_slots(pg, leg_labels);
    std::vector<std::size_t> edge_label(r, 0);
    BigInt total = 0;
    for (;;) {
        std::int64_t prod = 1;
        for (std::size_t tri = 0; tri < pg.trinions && prod != 0; ++tri)
            prod *= trinion_value(t, detail::slot_label(t, slots[3 * tri], edge_label),
                                  detail::slot_label(t, slots[3 * tri + 1], edge_label),
                                  detail::slot_label(t, slots[3 * tri + 2], edge_label));
        total += prod;
        std::size_t k = 0;
        while (k < r && ++edge_label[k] == n) edge_label[k++] = 0;
        if (k == r) break;
    }
    return total;
}

inline std::vector<std::size_t> marking_indices(const FusionTable& t, const MarkedSurface& s) {
    std::vector<std::size_t> out;
    for (const auto& m : s.markings) {
        if (m.level() != t.level())
            throw PreconditionError("markings", "marking " + m.weight().str() + " is at level " +
                                                    std::to_string(m.level()) + ", table is at level " +
                                                    std::to_string(t.level()));
        out.push_back(t.index_of(m.weight()));
    }
    return out;
}

inline void require_shape(const MarkedSurface& s, const PantsGraph& pg) {
    pg.validate();
    if (pg.legs.size() != s.boundary() || pg.genus() != s.genus || pg.components() != 1)
        throw PreconditionError("graph", "pants graph does not match surface (g=" + std::to_string(s.genus) +
                                             ", b=" + std::to_string(s.boundary()) + ")");
}

/// Verlinde number of a marked surface by factorization over a pants decomposition.
inline BigInt verlinde_number(const MarkedSurface& s, const FusionTable& t, const PantsGraph& pg) {
    require_shape(s, pg);
    return evaluate_graph(t, pg, marking_indices(t, s));
}

inline BigInt verlinde_number(const MarkedSurface& s, const FusionTable& t) {
    return verlinde_number(s, t, pants_graph(s.genus, static_cast<std::int64_t>(s.boundary())));
}

using BigMatrix = std::vector<std::vector<BigInt>>;

/// A_{αβ} = Σ_{μ,ν} N_{μ,ν;α} N_{μ,ν;β}: the two-holed torus with markings α, *β.
inline BigMatrix handle_matrix(const FusionTable& t) {
    const std::size_t n = t.size();
    BigMatrix a(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::int64_t s = 0;
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t v = 0; v < n; ++v) s += t(m, v, x) * t(m, v, y);
            a[x][y] = s;
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < x; ++y) check_invariant(a[x][y] == a[y][x], "handle matrix is not symmetric");
    return a;
}

inline BigInt trace_of_power(const BigMatrix& a, std::size_t power) {
    const std::size_t n = a.size();
    BigMatrix p(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
    for (std::size_t step = 0; step < power; ++step) {
        BigMatrix q(n, std::vector<BigInt>(n, BigInt(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (p[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) q[i][j] += p[i][k] * a[k][j];
            }
        p = std::move(q);
    }
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += p[i][i];
    return tr;
}

/// Closed genus-g Verlinde number as Tr(A^{g−1}).
inline BigInt verlinde_via_trace(std::int64_t genus, const FusionTable& t) {
    if (genus < 2) throw PreconditionError("genus", "trace formula needs genus >= 2, got " + std::to_string(genus));
    return trace_of_power(handle_matrix(t), static_cast<std::size_t>(genus - 1));
}

struct FactorizationCheck {
    bool pass = false;
    BigInt value1, value2;
    std::string graph1, graph2;  // decomposition hashes
};

inline FactorizationCheck factorization_check(const MarkedSurface& s, const FusionTable& t, const PantsGraph& g1,
                                              const PantsGraph& g2) {
    FactorizationCheck c;
    c.value1 = verlinde_number(s, t, g1);
    c.value2 = verlinde_number(s, t, g2);
    c.graph1 = g1.hash();
    c.graph2 = g2.hash();
    c.pass = c.value1 == c.value2;
    return c;
}

struct EigenvalueCheck {
    bool pass = false;
    BigInt exact_trace;
    double numeric_trace = 0.0;
    double deviation = 0.0;
    double tolerance = 0.0;
    std::vector<double> eigenvalues;
};

/// Σ λ_i^{g−1} from a numeric symmetric eigensolve, compared with the exact trace.
inline EigenvalueCheck eigenvalue_crosscheck(std::int64_t genus, const FusionTable& t, double tol = 1e-9) {
    if (genus < 2) throw PreconditionError("genus", "eigenvalue check needs genus >= 2, got " + std::to_string(genus));
    const auto a = handle_matrix(t);
    const std::size_t n = a.size();
    EigenvalueCheck c;
    c.tolerance = tol;
    c.exact_trace = trace_of_power(a, static_cast<std::size_t>(genus - 1));
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i][j].convert_to<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InvariantError("eigenvalue_crosscheck: eigensolver did not converge");
    for (std::size_t i = 0; i < n; ++i) {
        const double l = solver.eigenvalues()(static_cast<Eigen::Index>(i));
        c.eigenvalues.push_back(l);
        c.numeric_trace += std::pow(l, static_cast<double>(genus - 1));
    }
    const double exact = c.exact_trace.convert_to<double>();
    c.deviation = std::abs(c.numeric_trace - exact);
    c.pass = c.deviation <= tol * (1.0 + std::abs(exact));
    return c;
}

struct DimensionReport {
    std::int64_t moduli_dim = 0;  ///< expected dimension of the moduli space with the given face markings
    std::int64_t cross_section_dim_v1 = 0;
    std::int64_t cross_section_dim_v2 = 0;
};

/// Cross-section dimension in both forms: (2g+b−1)dim G + Σ dim U_σ − dim G and
/// (2g−2)dim G + Σ (dim G + dim (LG)_σ).
inline DimensionReport dimension_report(const RootSystem& rs, std::int64_t genus, std::size_t boundary,
                                        const std::vector<AlcoveFace>& faces) {
    if (faces.size() != boundary)
        throw PreconditionError("faces", "expected " + std::to_string(boundary) + " faces, got " +
                                             std::to_string(faces.size()));
    if (genus < 0) throw PreconditionError("genus", "genus must be nonnegative");
    const auto dim_g = static_cast<std::int64_t>(rs.group_dimension());
    const auto b = static_cast<std::int64_t>(boundary);
    std::int64_t sum_centralizer = 0;
    for (const auto& f : faces) sum_centralizer += static_cast<std::int64_t>(face_centralizer_dim(rs, f));
    DimensionReport r;
    r.cross_section_dim_v1 = (2 * genus + b - 1) * dim_g + sum_centralizer - dim_g;
    r.cross_section_dim_v2 = (2 * genus - 2) * dim_g + b * dim_g + sum_centralizer;
    check_invariant(r.cross_section_dim_v1 == r.cross_section_dim_v2, "dimension formulas disagree");
    r.moduli_dim = (2 * genus - 2) * dim_g + b * dim_g - sum_centralizer;
    return r;
}

}  // namespace verlinde
