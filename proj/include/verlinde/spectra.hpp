#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "verlinde/fusion.hpp"

namespace verlinde {

struct CharacterSpectrumReport {
    bool pass = true;
    bool matrices_commute = true;
    double tolerance = 1e-6;
    double max_deviation = 0.0;
    std::vector<double> per_label_deviation;
    std::vector<Weight> degenerate_points;  ///< evaluation points with vanishing Weyl denominator
};

/// Numeric Weyl character χ_μ at the point 2π(λ+ρ)/(k+h^∨) for every label λ.
inline std::vector<std::complex<double>> character_values(const FusionTable& t, const std::vector<WeylElement>& group,
                                                          const Weight& mu, std::vector<Weight>* degenerate = nullptr) {
    const auto& rs = t.root_system();
    const double scale = 2.0 * std::numbers::pi / static_cast<double>(t.level() + rs.dual_coxeter);
    const Weight rho = rs.rho();
    std::vector<Weight> num_orbit, den_orbit;
    std::vector<int> signs;
    for (const auto& w : group) {
        num_orbit.push_back(w.apply(mu + rho));
        den_orbit.push_back(w.apply(rho));
        signs.push_back(w.sign);
    }
    std::vector<std::complex<double>> out;
    for (const auto& label : t.labels()) {
        const Weight x = label.weight() + rho;
        std::complex<double> num = 0, den = 0;
        for (std::size_t e = 0; e < group.size(); ++e) {
            const double pn = scale * rs.inner(num_orbit[e], x).convert_to<double>();
            const double pd = scale * rs.inner(den_orbit[e], x).convert_to<double>();
            num += static_cast<double>(signs[e]) * std::polar(1.0, pn);
            den += static_cast<double>(signs[e]) * std::polar(1.0, pd);
        }
        if (std::abs(den) < 1e-12) {
            if (degenerate) degenerate->push_back(label.weight());
            out.emplace_back(std::nan(""), std::nan(""));
            continue;
        }
        out.push_back(num / den);
    }
    return out;
}

/// Checks that the spectrum of each fusion matrix equals the multiset of
/// character values at the shifted level-k points, and that fusion matrices commute.
inline CharacterSpectrumReport character_eigenvalues(const FusionTable& t, double tolerance = 1e-6) {
    const auto& rs = t.root_system();
    if (rs.rank() > 3) throw PreconditionError("group", "character_eigenvalues requires rank <= 3");
    CharacterSpectrumReport rep;
    rep.tolerance = tolerance;
    const auto group = weyl_group_elements(rs);
    const std::size_t n = t.size();

    std::vector<IntMatrix> mats;
    for (std::size_t i = 0; i < n; ++i) mats.push_back(fusion_matrix(t, i));
    for (std::size_t i = 0; i < n && rep.matrices_commute; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (multiply(mats[i], mats[j]) != multiply(mats[j], mats[i])) {
                rep.matrices_commute = false;
                break;
            }

    for (std::size_t i = 0; i < n; ++i) {
        Eigen::MatrixXd m(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) m(a, b) = static_cast<double>(mats[i][a][b]);
        Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
        if (solver.info() != Eigen::Success) {
            rep.pass = false;
            rep.per_label_deviation.push_back(INFINITY);
            continue;
        }
        std::vector<std::complex<double>> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
        auto chars = character_values(t, group, t.labels()[i].weight(), &rep.degenerate_points);

        // greedy nearest matching between the two multisets
        double worst = 0.0;
        std::vector<bool> used(n, false);
        for (const auto& c : chars) {
            double best = INFINITY;
            std::size_t at = n;
            for (std::size_t e = 0; e < n; ++e) {
                if (used[e]) continue;
                const double d = std::abs(eig[e] - c);
                if (d < best) best = d, at = e;
            }
            if (at < n) used[at] = true;
            worst = std::max(worst, std::isnan(best) ? INFINITY : best);
        }
        rep.per_label_deviation.push_back(worst);
        rep.max_deviation = std::max(rep.max_deviation, worst);
    }
    rep.pass = rep.matrices_commute && rep.degenerate_points.empty() && rep.max_deviation <= tolerance;
    return rep;
}

}  // namespace verlinde
