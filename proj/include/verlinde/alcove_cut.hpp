#pragma once

#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "verlinde/affine.hpp"
#include "verlinde/polytope.hpp"

namespace verlinde {

/// Wall j of the alcove as φ_j · x ≥ c_j (x in fundamental-weight coordinates at level 1).
struct AlcoveWall {
    RationalVector functional;
    Rational bound;
    RationalVector normal;  ///< inward normal n_j with (n_j, x) = φ_j · x
};

inline std::vector<AlcoveWall> alcove_walls(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    const auto gram_inv = matrix_inverse(rs.gram);
    std::vector<AlcoveWall> out;
    for (std::size_t j = 0; j <= n; ++j) {
        AlcoveWall w;
        w.functional.assign(n, Rational(0));
        if (j == 0) {
            for (std::size_t i = 0; i < n; ++i) w.functional[i] = -rs.comarks[i];
            w.bound = -1;
        } else {
            w.functional[j - 1] = 1;
            w.bound = 0;
        }
        w.normal.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) w.normal[i] += gram_inv[i][k] * w.functional[k];
        out.push_back(std::move(w));
    }
    return out;
}

/// The closed unit alcove as a polytope.
inline RationalPolytope alcove_polytope(const RootSystem& rs) {
    RationalPolytope p(rs.rank());
    for (const auto& w : alcove_walls(rs)) {
        RationalVector a = w.functional;
        for (auto& x : a) x = -x;
        p.add({std::move(a), -w.bound});
    }
    return p;
}

/// Vectors whose linear functional (v, ·) is minimized over the alcove on the face.
struct DualCone {
    AlcoveFace face;
    std::vector<RationalVector> generators;
};

inline DualCone dual_cone(const RootSystem& rs, const AlcoveFace& face) {
    const auto walls = alcove_walls(rs);
    const auto alcove = alcove_polytope(rs);
    DualCone c{face, {}};
    for (std::size_t j = 0; j < walls.size(); ++j) {
        if (!face.vanishing_walls[j]) continue;
        // min over the alcove of (n_j, x) = φ_j·x must equal its value on the face
        RationalVector neg = walls[j].functional;
        for (auto& x : neg) x = -x;
        const auto r = alcove.maximize(neg);
        check_invariant(r.status == lp::Status::optimal && -r.value == dot(walls[j].functional, face.representative),
                        "dual_cone: generator not minimized on its face");
        c.generators.push_back(walls[j].normal);
    }
    return c;
}

/// One polytope Q_{τ,σ} = closure(τ_ε) − C_σ, for a face τ of the closure of σ.
struct Cut {
    AlcoveFace tau;
    AlcoveFace sigma;
    std::size_t codim = 0;
    RationalPolytope region;   ///< unbounded H-representation
    RationalPolytope clipped;  ///< region ∩ alcove
};

struct CutCollection {
    TypeLabel group;
    std::size_t rank = 0;
    Rational epsilon;
    RationalVector mu0;
    RationalPolytope alcove;
    std::vector<Cut> cuts;
};

inline bool is_face_of_closure(const AlcoveFace& tau, const AlcoveFace& sigma) {
    for (std::size_t j = 0; j < sigma.vanishing_walls.size(); ++j)
        if (sigma.vanishing_walls[j] && !tau.vanishing_walls[j]) return false;
    return true;
}

/// Alcove points μ/k of the level-k labels.
inline std::vector<std::pair<Weight, RationalVector>> level_lattice_points(const RootSystem& rs, std::int64_t level) {
    std::vector<std::pair<Weight, RationalVector>> out;
    for (const auto& lw : level_weights(rs, level)) {
        RationalVector x(rs.rank());
        for (std::size_t i = 0; i < rs.rank(); ++i) x[i] = Rational(lw.weight()[i], level);
        out.emplace_back(lw.weight(), std::move(x));
    }
    return out;
}

/// A level-k lattice point lying on a lower-dimensional cut or on the boundary
/// of a full-dimensional one; nothing if the collection is generic at level k.
inline std::optional<Weight> genericity_violation(const CutCollection& cc, std::int64_t level) {
    const RootSystem rs = build_root_system(cc.group);
    for (const auto& [w, x] : level_lattice_points(rs, level))
        for (const auto& cut : cc.cuts) {
            if (!cut.region.contains(x)) continue;
            if (cut.codim > 0 || !cut.region.contains_strictly(x)) return w;
        }
    return std::nullopt;
}

/// Builds all Q_{τ,σ} for the shrunken alcove A_ε = (1−ε)A + ε μ0. When
/// `level` is given, rejects parameters for which some level-k point is not generic.
inline CutCollection build_cut_collection(const RootSystem& rs, const Rational& epsilon, const RationalVector& mu0,
                                          std::optional<std::int64_t> level = std::nullopt) {
    if (!(epsilon > 0 && epsilon < 1)) throw PreconditionError("epsilon", "epsilon must lie in (0,1)");
    if (mu0.size() != rs.rank()) throw PreconditionError("mu0", "mu0 has wrong dimension");
    const auto walls = alcove_walls(rs);
    for (std::size_t j = 0; j < walls.size(); ++j)
        if (dot(walls[j].functional, mu0) <= walls[j].bound)
            throw PreconditionError("mu0", "mu0 is not strictly inside the alcove");

    CutCollection cc;
    cc.group = rs.label;
    cc.rank = rs.rank();
    cc.epsilon = epsilon;
    cc.mu0 = mu0;
    cc.alcove = alcove_polytope(rs);

    const std::size_t n = rs.rank();
    RationalVector shrunk_bound(walls.size());
    for (std::size_t j = 0; j < walls.size(); ++j)
        shrunk_bound[j] = (1 - epsilon) * walls[j].bound + epsilon * dot(walls[j].functional, mu0);

    const auto faces = alcove_faces(rs);
    for (const auto& sigma : faces) {
        std::vector<std::size_t> cone;  // walls spanning C_σ
        for (std::size_t j = 0; j < walls.size(); ++j)
            if (sigma.vanishing_walls[j]) cone.push_back(j);
        for (const auto& tau : faces) {
            if (!is_face_of_closure(tau, sigma)) continue;
            // variables (y, λ): y + Σ λ_j n_j ∈ closure(τ_ε), λ ≥ 0
            const std::size_t dim = n + cone.size();
            RationalPolytope lifted(dim);
            for (std::size_t i = 0; i < walls.size(); ++i) {
                RationalVector a(dim, Rational(0));
                for (std::size_t k = 0; k < n; ++k) a[k] = -walls[i].functional[k];
                for (std::size_t c = 0; c < cone.size(); ++c) a[n + c] = -dot(walls[i].functional, walls[cone[c]].normal);
                if (tau.vanishing_walls[i])
                    lifted.add_equality(a, -shrunk_bound[i]);
                else
                    lifted.add({std::move(a), -shrunk_bound[i]});
            }
            for (std::size_t c = 0; c < cone.size(); ++c) {
                RationalVector a(dim, Rational(0));
                a[n + c] = -1;
                lifted.add({std::move(a), 0});
            }
            std::vector<std::size_t> keep(n);
            std::iota(keep.begin(), keep.end(), 0);
            Cut cut;
            cut.tau = tau;
            cut.sigma = sigma;
            cut.codim = tau.codim() - sigma.codim();
            cut.region = fm_project(lifted, keep);
            cut.clipped = canonicalize(cut.region.intersect(cc.alcove));
            check_invariant(cut.region.affine_dimension() == static_cast<int>(n - cut.codim),
                            "cut polytope has unexpected dimension");
            cc.cuts.push_back(std::move(cut));
        }
    }
    if (level) {
        if (auto bad = genericity_violation(cc, *level))
            throw PreconditionError("epsilon", "cut collection is not generic at level " + std::to_string(*level) +
                                                   ": lattice point " + bad->str() + " lies on a cut boundary");
    }
    return cc;
}

struct EulerLedgerEntry {
    Weight point;
    std::vector<std::size_t> containing;  ///< indices into CutCollection::cuts
    std::int64_t signed_sum = 0;
};

struct EulerCheck {
    bool pass = true;
    bool generic = true;
    std::vector<EulerLedgerEntry> ledger;
};

/// Σ over closed cuts containing each level-k point of (−1)^codim; must equal 1 everywhere.
inline EulerCheck euler_check(const CutCollection& cc, std::int64_t level) {
    const RootSystem rs = build_root_system(cc.group);
    EulerCheck out;
    out.generic = !genericity_violation(cc, level).has_value();
    for (const auto& [w, x] : level_lattice_points(rs, level)) {
        EulerLedgerEntry e{w, {}, 0};
        for (std::size_t i = 0; i < cc.cuts.size(); ++i)
            if (cc.cuts[i].clipped.contains(x)) {
                e.containing.push_back(i);
                e.signed_sum += cc.cuts[i].codim % 2 ? -1 : 1;
            }
        out.pass = out.pass && e.signed_sum == 1;
        out.ledger.push_back(std::move(e));
    }
    return out;
}

namespace detail {

inline bool covered_by(const RationalPolytope& piece, const std::vector<const RationalPolytope*>& cover,
                       std::size_t from) {
    if (!piece.has_interior()) return true;
    if (from == cover.size()) return false;
    const auto& hs = cover[from]->halfspaces();
    // piece \ Q = ∪_j piece ∩ {a_j x ≥ b_j} ∩ {a_i x ≤ b_i : i < j}
    for (std::size_t j = 0; j < hs.size(); ++j) {
        RationalPolytope part = piece;
        RationalVector neg = hs[j].a;
        for (auto& x : neg) x = -x;
        part.add({std::move(neg), -hs[j].b});
        for (std::size_t i = 0; i < j; ++i) part.add(hs[i]);
        if (!covered_by(part, cover, from + 1)) return false;
    }
    return true;
}

}  // namespace detail

/// The alcove minus the union of the cuts has empty interior (hence is empty,
/// the cuts being closed).
inline bool covers_alcove(const CutCollection& cc) {
    std::vector<const RationalPolytope*> cover;
    for (const auto& c : cc.cuts)
        if (c.codim == 0) cover.push_back(&c.region);
    return detail::covered_by(cc.alcove, cover, 0);
}

struct FaceClosureFailure {
    std::size_t cut = 0;
    std::size_t halfspace = 0;
};

/// Every facet of every cut that meets the alcove is itself a cut.
inline std::vector<FaceClosureFailure> boundary_face_closure(const CutCollection& cc) {
    std::vector<FaceClosureFailure> failures;
    for (std::size_t i = 0; i < cc.cuts.size(); ++i) {
        const auto& region = cc.cuts[i].region;
        const auto eq = region.implicit_equalities();
        const auto& hs = region.halfspaces();
        for (std::size_t h = 0; h < hs.size(); ++h) {
            if (std::find(eq.begin(), eq.end(), h) != eq.end()) continue;
            RationalPolytope facet = region;
            RationalVector neg = hs[h].a;
            for (auto& x : neg) x = -x;
            facet.add({std::move(neg), -hs[h].b});
            if (facet.intersect(cc.alcove).is_empty()) continue;
            const bool found = std::any_of(cc.cuts.begin(), cc.cuts.end(),
                                           [&](const Cut& c) { return c.region.same_set(facet); });
            if (!found) failures.push_back({i, h});
        }
    }
    return failures;
}

/// Collection for random rational (ε, μ0) with prime denominators, redrawn until generic at `level`.
inline CutCollection random_generic_collection(const RootSystem& rs, std::int64_t level, std::mt19937_64& rng,
                                               std::size_t max_tries = 64) {
    static constexpr std::int64_t primes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(primes) - 1);
    for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
        const std::int64_t q = primes[pick(rng)];
        std::uniform_int_distribution<std::int64_t> num(1, q / 2);
        const Rational eps(num(rng), q);
        // barycentric weights on the vertices, all positive
        std::uniform_int_distribution<std::int64_t> bary(1, 997);
        RationalVector mu0(rs.rank(), Rational(0));
        Rational total = 0;
        std::vector<std::int64_t> wts;
        for (std::size_t j = 0; j <= rs.rank(); ++j) wts.push_back(bary(rng)), total += wts.back();
        for (std::size_t j = 0; j <= rs.rank(); ++j) {
            const auto v = alcove_vertex(rs, j);
            for (std::size_t i = 0; i < rs.rank(); ++i) mu0[i] += Rational(wts[j]) / total * v[i];
        }
        try {
            return build_cut_collection(rs, eps, mu0, level);
        } catch (const PreconditionError&) {
            continue;
        }
    }
    throw PreconditionError("epsilon", "no generic cut parameters found");
}

}  // namespace verlinde
