#include "crystal/demazure.hpp"
#include "crystal/inequalities.hpp"
#include "crystal/polytope.hpp"

#include "golden.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

using namespace crystal;

namespace {

Inequality row(std::vector<int> coeffs, int constant) {
    Inequality r;
    for (int c : coeffs) r.coeffs.emplace_back(c);
    r.constant = constant;
    return r;
}

}  // namespace

TEST(LatticePoints, EmptySystemFillsBox) {
    EXPECT_EQ(lattice_points(HalfSpaceSystem{2, {}}, LatticeBox{{0, 0}, {1, 1}}).size(), 4u);
}

TEST(LatticePoints, A2RhoSystems) {
    const auto box = LatticeBox{{0, 0, 0}, {2, 4, 2}};
    const auto forms = delta_hrep(generate_xi(SequenceSpec(golden::a2(), golden::kA2Word), 4, 16), 3);
    EXPECT_EQ(lattice_points(to_system(forms, 3, WeightVec{{1, 1}}), box).size(), 8u);
    EXPECT_EQ(golden::filter_box(box, [](const Point& a) { return golden::a2_string(a, 1, 1); }).size(), 8u);
}

TEST(LatticePoints, RationalCoefficients) {
    HalfSpaceSystem sys{1, {}};
    Inequality r;
    r.coeffs = {Rational(-1, 3)};
    r.constant = Rational(2, 3);  // a <= 2
    sys.rows.push_back(r);
    EXPECT_EQ(lattice_points(sys, LatticeBox{{0}, {5}}), (PointSet{{0}, {1}, {2}}));
}

TEST(LatticePoints, MonotoneUnderRowRemoval) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    const LatticeBox box{{-2, -2, -2}, {2, 2, 2}};
    for (int trial = 0; trial < 50; ++trial) {
        HalfSpaceSystem sys{3, {}};
        for (int j = 0; j < 4; ++j) sys.rows.push_back(row({d(rng), d(rng), d(rng)}, d(rng) + 2));
        const auto full = lattice_points(sys, box);
        for (std::size_t j = 0; j < sys.rows.size(); ++j) {
            HalfSpaceSystem less = sys;
            less.rows.erase(less.rows.begin() + static_cast<long>(j));
            const auto bigger = lattice_points(less, box);
            for (const auto& p : full) EXPECT_TRUE(bigger.count(p));
        }
    }
}

TEST(LatticePoints, ThreadCountDoesNotChangeResult) {
    const auto forms = delta_hrep(generate_xi(SequenceSpec(golden::c2(), golden::kC2Word), 5, 16), 4);
    const WeightVec lam{{2, 2}};
    const auto sys = to_system(forms, 4, lam);
    const auto box = delta_box(golden::c2(), golden::kC2Word, lam);
    ::setenv("CRYSTAL_POLYTOPE_THREADS", "1", 1);
    const auto one = lattice_points(sys, box);
    ::setenv("CRYSTAL_POLYTOPE_THREADS", "4", 1);
    const auto four = lattice_points(sys, box);
    ::unsetenv("CRYSTAL_POLYTOPE_THREADS");
    EXPECT_EQ(one, four);
    EXPECT_EQ(one.size(), 81u);
}

TEST(Normalize, ScalarDuplicate) {
    const auto n = normalize(HalfSpaceSystem{1, {row({2}, 0), row({1}, 0)}});
    ASSERT_EQ(n.rows.size(), 1u);
    EXPECT_EQ(n.rows[0], row({1}, 0));
}

TEST(Normalize, OrderIndependent) {
    std::vector<Inequality> rows{row({1, -1}, 2), row({0, 3}, 0), row({-2, 0}, 4), row({4, -4}, 8)};
    const auto a = normalize(HalfSpaceSystem{2, rows});
    std::reverse(rows.begin(), rows.end());
    const auto b = normalize(HalfSpaceSystem{2, rows});
    EXPECT_EQ(a.rows, b.rows);
    EXPECT_EQ(a.rows.size(), 3u);
}

TEST(Normalize, DropsTrivialRows) {
    EXPECT_TRUE(normalize(HalfSpaceSystem{2, {row({0, 0}, 3)}}).rows.empty());
}

TEST(Normalize, A2RawSystemHasSevenRows) {
    const auto forms = delta_hrep(generate_xi(SequenceSpec(golden::a2(), golden::kA2Word), 6, 16), 3);
    EXPECT_EQ(normalize(to_system(forms, 3, WeightVec{{1, 1}})).rows.size(), 7u);
    // a2 >= 0 follows from a2 >= a3 >= 0
    EXPECT_EQ(normalize(to_system(forms, 3, WeightVec{{1, 1}}), true).rows.size(), 6u);
}

TEST(FourierMotzkin, Feasibility) {
    EXPECT_TRUE(fourier_motzkin_feasible(1, {row({1}, 0), row({-1}, 1)}, {false, false}));
    EXPECT_FALSE(fourier_motzkin_feasible(1, {row({1}, -2), row({-1}, 1)}, {false, false}));
    EXPECT_FALSE(fourier_motzkin_feasible(1, {row({1}, 0), row({-1}, 0)}, {true, false}));
    EXPECT_TRUE(implies(HalfSpaceSystem{2, {row({1, -1}, 0), row({0, 1}, 0)}}, row({1, 0}, 0)));
    EXPECT_FALSE(implies(HalfSpaceSystem{2, {row({0, 1}, 0)}}, row({1, 0}, 0)));
}

TEST(CompareLevels, A2Rho) {
    const auto forms = delta_hrep(generate_xi(SequenceSpec(golden::a2(), golden::kA2Word), 4, 16), 3);
    const WeightVec rho{{1, 1}};
    const auto rep = compare_levels(
        semigroup_points(golden::a2(), golden::kA2Word, rho, 3),
        [&](int k) { return to_system(forms, 3, rho.scaled(k)); },
        [&](int k) { return delta_box(golden::a2(), golden::kA2Word, rho.scaled(k)); });
    EXPECT_TRUE(rep.ok);
    ASSERT_EQ(rep.levels.size(), 3u);
    EXPECT_EQ(rep.levels[0].crystal_count, 8u);
    EXPECT_EQ(rep.levels[1].crystal_count, 27u);
    EXPECT_EQ(rep.levels[2].crystal_count, 64u);
}

TEST(CompareLevels, ReportsDiscrepancy) {
    GradedPointSet g;
    g.levels[1] = {{0}, {1}};
    const auto rep = compare_levels(
        g, [](int) { return HalfSpaceSystem{1, {}}; }, [](int) { return LatticeBox{{0}, {2}}; });
    EXPECT_FALSE(rep.ok);
    EXPECT_EQ(rep.levels[0].first_discrepancy, (Point{2}));
}

TEST(CompareLevels, ZeroWeightAndDilation) {
    const auto forms = delta_hrep(generate_xi(SequenceSpec(golden::c2(), golden::kC2Word), 5, 16), 4);
    const WeightVec lam{{1, 1}};
    const auto g = semigroup_points(golden::c2(), golden::kC2Word, lam, 3);
    EXPECT_EQ(g.levels.at(1).size(), 16u);
    // k-fold sums of level-1 points lie in level k
    for (int k = 2; k <= 3; ++k) {
        const auto sys = to_system(forms, 4, lam.scaled(k));
        for (const auto& p : g.levels.at(1))
            for (const auto& q : g.levels.at(k - 1)) {
                Point s(4);
                for (int j = 0; j < 4; ++j) s[j] = p[j] + q[j];
                EXPECT_TRUE(sys.satisfied_by(s));
                EXPECT_TRUE(g.levels.at(k).count(s));
            }
    }
}
