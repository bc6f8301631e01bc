#include <gtest/gtest.h>

#include "oracles.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/spectra.hpp"

using namespace verlinde;

TEST(FusionCoefficient, Examples) {
    const auto a1 = build_root_system("A1");
    EXPECT_EQ(fusion_coefficient(a1, Weight{1}, Weight{1}, Weight{0}, 1), 1);
    EXPECT_EQ(fusion_coefficient(a1, Weight{1}, Weight{1}, Weight{2}, 2), 1);
    EXPECT_EQ(fusion_coefficient(a1, Weight{2}, Weight{2}, Weight{2}, 2), 0);
    for (int k = 1; k <= 5; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) EXPECT_EQ(fusion_coefficient(a1, Weight{m}, Weight{0}, Weight{n}, k), m == n);
}

TEST(FusionCoefficient, RejectsInadmissibleLabel) {
    const auto a2 = build_root_system("A2");
    try {
        fusion_coefficient(a2, Weight{1, 1}, Weight{0, 0}, Weight{1, 1}, 1);
        ADD_FAILURE();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos) << e.what();
    }
}

TEST(FusionTable, Su2ClosedForm) {
    const auto a1 = build_root_system("A1");
    for (int k = 1; k <= 8; ++k) {
        const auto t = build_fusion_table(a1, k);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b)
                for (int c = 0; c <= k; ++c) EXPECT_EQ(t(a, b, c), oracle::su2_fusion(a, b, c, k)) << k;
    }
}

TEST(FusionTable, CyclicGroupsAtLevelOne) {
    const auto z2 = build_fusion_table(build_root_system("A1"), 1);
    EXPECT_EQ(z2.coefficients(), (std::vector<std::int64_t>{1, 0, 0, 1, 0, 1, 1, 0}));
    // Z3 charge of (a,b) is a + 2b mod 3; N_{x,y;z} = 1 iff charge(x)+charge(y) = charge(z).
    const auto z3 = build_fusion_table(build_root_system("A2"), 1);
    ASSERT_EQ(z3.size(), 3u);
    auto charge = [&](std::size_t i) { return (z3.labels()[i].weight()[0] + 2 * z3.labels()[i].weight()[1]) % 3; };
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(z3(i, j, l), (charge(i) + charge(j)) % 3 == charge(l));
}

TEST(FusionTable, TruncatesToClassicalTensorProduct) {
    for (const auto& name : {"A1", "A2"}) {
        const auto rs = build_root_system(name);
        const auto small = level_weights(rs, 2);
        for (const auto& a : small)
            for (const auto& b : small) {
                const auto k = rs.level_of(a.weight()) + rs.level_of(b.weight());
                if (k == 0) continue;
                const auto tensor = tensor_decompose(rs, a.weight(), b.weight());
                for (const auto& c : level_weights(rs, k)) {
                    const auto it = tensor.find(c.weight());
                    const std::int64_t classical = it == tensor.end() ? 0 : it->second;
                    EXPECT_EQ(fusion_coefficient(rs, a.weight(), b.weight(), c.weight(), k), classical);
                }
            }
    }
}

TEST(FusionTable, UnitSliceIsIdentity) {
    for (const auto& [name, k] : std::vector<std::pair<std::string, int>>{{"A2", 3}, {"C2", 2}, {"G2", 2}, {"B3", 1}}) {
        const auto t = build_fusion_table(build_root_system(name), k);
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t l = 0; l < t.size(); ++l) EXPECT_EQ(t(i, t.zero_index(), l), i == l);
    }
}

TEST(FusionTable, ThreadedBuildIsIdentical) {
    const auto rs = build_root_system("A2");
    EXPECT_EQ(build_fusion_table(rs, 3, 1).coefficients(), build_fusion_table(rs, 3, 4).coefficients());
}

TEST(TrinionValue, SymmetricAndDualized) {
    const auto a1 = build_root_system("A1");
    const auto t2 = build_fusion_table(a1, 2);
    EXPECT_EQ(trinion_value(t2, 1, 1, 2), 1);
    EXPECT_EQ(trinion_value(t2, 2, 2, 2), 0);
    const auto t = build_fusion_table(build_root_system("A2"), 3);
    for (std::size_t a = 0; a < t.size(); ++a) {
        EXPECT_EQ(trinion_value(t, a, t.dual_index(a), t.zero_index()), 1);
        for (std::size_t b = 0; b < t.size(); ++b)
            for (std::size_t c = 0; c < t.size(); ++c) {
                const auto v = trinion_value(t, a, b, c);
                EXPECT_EQ(v, t(a, b, t.dual_index(c)));
                EXPECT_EQ(v, trinion_value(t, b, c, a));
                EXPECT_EQ(v, trinion_value(t, b, a, c));
            }
    }
}

TEST(Axioms, HoldForBuiltTables) {
    for (const auto& [name, k] :
         std::vector<std::pair<std::string, int>>{{"A1", 8}, {"A2", 4}, {"C2", 3}, {"G2", 3}, {"A3", 2}, {"B3", 2}}) {
        const auto t = build_fusion_table(build_root_system(name), k, 2, false);
        const auto r = verify_fusion_axioms(t);
        EXPECT_TRUE(r.all()) << name << " k=" << k;
        EXPECT_TRUE(r.counterexamples.empty());
    }
}

TEST(Axioms, InjectedFaultIsCaughtByAssociativity) {
    const auto t = build_fusion_table(build_root_system("A1"), 3);
    // Bump one trinion value in every slot order, so symmetry, duality and the
    // unit still hold and only associativity can notice.
    auto bad = t;
    const std::size_t a = 1, b = 1, c = 2;
    for (auto [x, y, z] : std::vector<std::array<std::size_t, 3>>{{a, b, c}, {b, a, c}, {a, c, b}, {c, a, b}})
        bad = bad.with_coefficient(x, y, z, t(x, y, z) + 1);
    const auto r = verify_fusion_axioms(bad);
    EXPECT_FALSE(r.associativity);
    bool witnessed = false;
    for (const auto& ce : r.counterexamples)
        if (ce.axiom == "associativity") witnessed = ce.labels.size() == 4;
    EXPECT_TRUE(witnessed);

    const auto single = t.with_coefficient(0, 1, 2, 1);
    EXPECT_FALSE(verify_fusion_axioms(single).all());
}

TEST(FusionMatrices, CommuteAndTranspose) {
    for (const auto& [name, k] : std::vector<std::pair<std::string, int>>{{"A2", 3}, {"C2", 2}, {"G2", 2}}) {
        const auto t = build_fusion_table(build_root_system(name), k);
        std::vector<IntMatrix> ms;
        for (std::size_t i = 0; i < t.size(); ++i) ms.push_back(fusion_matrix(t, i));
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto& m = ms[i];
            const auto& md = ms[t.dual_index(i)];
            for (std::size_t x = 0; x < t.size(); ++x)
                for (std::size_t y = 0; y < t.size(); ++y) EXPECT_EQ(md[x][y], m[y][x]);
            for (std::size_t j = 0; j < t.size(); ++j) EXPECT_EQ(multiply(ms[i], ms[j]), multiply(ms[j], ms[i]));
        }
        const auto& unit = ms[t.zero_index()];
        for (std::size_t x = 0; x < t.size(); ++x)
            for (std::size_t y = 0; y < t.size(); ++y) EXPECT_EQ(unit[x][y], x == y);
    }
}

TEST(CharacterSpectra, MatchFusionEigenvalues) {
    for (const auto& [name, k] :
         std::vector<std::pair<std::string, int>>{{"A1", 1}, {"A1", 6}, {"A2", 2}, {"A2", 3}, {"C2", 2}, {"G2", 2}, {"B3", 1}}) {
        const auto t = build_fusion_table(build_root_system(name), k);
        const auto r = character_eigenvalues(t);
        EXPECT_TRUE(r.pass) << name << " k=" << k << " deviation " << r.max_deviation;
        EXPECT_TRUE(r.matrices_commute);
        EXPECT_TRUE(r.degenerate_points.empty());
        EXPECT_LE(r.max_deviation, 1e-6);
    }
}

TEST(CharacterSpectra, Su2LevelOneByHand) {
    // χ_1 at the shifted points π(λ+1)/3 is 2cos(π/3)=1 and 2cos(2π/3)=−1.
    const auto t = build_fusion_table(build_root_system("A1"), 1);
    const auto group = weyl_group_elements(t.root_system());
    const auto values = character_values(t, group, Weight{1});
    ASSERT_EQ(values.size(), 2u);
    EXPECT_NEAR(values[0].real(), 1.0, 1e-12);
    EXPECT_NEAR(values[1].real(), -1.0, 1e-12);
}

TEST(CharacterSpectra, RejectsLargeRank) {
    const auto t = build_fusion_table(build_root_system("A4"), 1);
    EXPECT_THROW(character_eigenvalues(t), PreconditionError);
}

TEST(CharacterSpectra, DetectsCorruptedTable) {
    const auto t = build_fusion_table(build_root_system("A2"), 2);
    const auto bad = t.with_coefficient(1, 1, 1, t(1, 1, 1) + 1);
    EXPECT_FALSE(character_eigenvalues(bad).pass);
}
