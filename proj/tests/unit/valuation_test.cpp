#include "crystal/demazure.hpp"
#include "crystal/valuation.hpp"

#include "golden.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace crystal;

namespace {

MultiPoly P(const std::string& s, int r = 3) { return MultiPoly::parse(s, r); }

MultiPoly random_poly(std::mt19937& rng, int r, int max_deg, int terms) {
    std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_deg);
    MultiPoly f(r);
    for (int t = 0; t < terms; ++t) {
        Exponent e(r);
        int budget = deg(rng);
        for (int i = 0; i < r; ++i) {
            e[i] = budget > 0 ? static_cast<int>(rng() % (budget + 1)) : 0;
            budget -= e[i];
        }
        f.add_term(e, coeff(rng));
    }
    return f;
}

std::vector<int> minus(std::vector<int> v) {
    for (int& x : v) x = -x;
    return v;
}

}  // namespace

TEST(Parse, Syntax) {
    EXPECT_EQ(to_string(P("t1*t2 + t3^2")), "t1*t2 + t3^2");
    EXPECT_EQ(P("(t1+t3)^2"), P("t1^2 + 2*t1*t3 + t3^2"));
    EXPECT_EQ(P("-t1 - -t2"), P("t2 - t1"));
    EXPECT_EQ(P("3"), MultiPoly::constant(3, 3));
    EXPECT_TRUE(P("t1 - t1").is_zero());
    EXPECT_THROW(P("t4"), std::invalid_argument);
    EXPECT_THROW(P("t1 +"), std::invalid_argument);
    EXPECT_THROW(P("(t1"), std::invalid_argument);
    EXPECT_THROW(P("t1 ** 2"), std::invalid_argument);
}

TEST(Value, Examples) {
    const auto f = P("t1*t2 + t3^2");
    EXPECT_EQ(value(f, {Flavor::HI, 3}), (std::vector<int>{-1, -1, 0}));
    EXPECT_EQ(value(f, {Flavor::TILDE, 3}), (std::vector<int>{-2, 0, 0}));
    EXPECT_EQ(value(P("1"), {Flavor::HI, 3}), (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(value(P("1"), {Flavor::TILDE, 3}), (std::vector<int>{0, 0, 0}));
    EXPECT_THROW(value(MultiPoly(3), {Flavor::HI, 3}), ZeroPolynomialError);
}

TEST(Value, RationalFunction) {
    const RationalFunction q{P("t1^2*t2"), P("t1 + t2")};
    EXPECT_EQ(value(q, {Flavor::HI, 3}), (std::vector<int>{-1, -1, 0}));
}

TEST(Value, Axioms) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const int r = 1 + trial % 4;
        const MultiPoly f = random_poly(rng, r, 4, 1 + trial % 5);
        const MultiPoly g = random_poly(rng, r, 4, 1 + trial % 3);
        if (f.is_zero() || g.is_zero()) continue;
        for (Flavor fl : {Flavor::HI, Flavor::TILDE}) {
            const ValuationOrder ord{fl, r};
            const auto vf = value(f, ord), vg = value(g, ord);
            std::vector<int> sum(r);
            for (int i = 0; i < r; ++i) sum[i] = vf[i] + vg[i];
            EXPECT_EQ(value(f * g, ord), sum);
            EXPECT_EQ(value(f * Rational(-7, 3), ord), vf);
            const MultiPoly s = f + g;
            if (!s.is_zero()) EXPECT_GE(value(s, ord), std::min(vf, vg));
        }
    }
}

TEST(Chevalley, Examples) {
    EXPECT_EQ(chevalley_value(P("t1*t2 + t3^2")), (std::vector<int>{1, 1, 0}));
    EXPECT_EQ(chevalley_value(P("1")), (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(chevalley_value(P("(t1+t3)^2")), (std::vector<int>{2, 0, 0}));
    EXPECT_THROW(chevalley_value(MultiPoly(2)), ZeroPolynomialError);
}

TEST(Chevalley, AgreesWithLeadingTerm) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 1 + trial % 4;
        const MultiPoly f = random_poly(rng, r, 5, 1 + trial % 6);
        if (f.is_zero()) continue;
        EXPECT_EQ(chevalley_value(f), minus(value(f, {Flavor::HI, r})));
    }
}

TEST(Unipotent, A2Word121) {
    const auto m = unipotent_product(Word{1, 2, 1}, builtin_generators_A(2));
    EXPECT_EQ(m[1][0], P("t1 + t3"));
    EXPECT_EQ(m[2][0], P("t1*t2"));
    EXPECT_EQ(m[2][1], P("t2"));
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(m[i][i], P("1"));
        for (int j = i + 1; j < 3; ++j) EXPECT_TRUE(m[i][j].is_zero());
    }
}

TEST(Unipotent, EmptyWordIsIdentity) {
    const auto m = unipotent_product(Word{}, builtin_generators_A(3));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_EQ(m[i][j], MultiPoly::constant(0, i == j ? 1 : 0));
}

TEST(Unipotent, QuadraticTermsInC2) {
    // F_1 squares to zero, F_2 too, but products mix
    const auto m = unipotent_product(Word{1, 2, 1, 2}, builtin_generators_C2());
    EXPECT_EQ(m[0][0], P("1", 4));
    EXPECT_TRUE(m[0][3].is_zero());
    EXPECT_FALSE(m[3][0].is_zero());
}

TEST(Unipotent, RejectsNonNilpotent) {
    RMatrix id{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    EXPECT_THROW(unipotent_product(Word{1}, {id}), std::invalid_argument);
}

TEST(Unipotent, ExponentialOfSquareNilpotent) {
    RMatrix n(3, std::vector<Rational>(3, Rational(0)));
    n[1][0] = 1;
    n[2][1] = 1;
    const auto m = unipotent_product(Word{1}, {n});
    EXPECT_EQ(m[2][0], MultiPoly::parse("t1^2", 1) * Rational(1, 2));
}

TEST(SectionSpan, A2Examples) {
    const auto m = unipotent_product(Word{1, 2, 1}, builtin_generators_A(2));
    const auto w1 = section_span(m, WeightVec{{1, 0}});
    EXPECT_EQ(std::set<MultiPoly>(w1.begin(), w1.end()), (std::set<MultiPoly>{P("1"), P("t1 + t3"), P("t1*t2")}));
    EXPECT_EQ(section_span(m, WeightVec{{0, 0}}), (std::vector<MultiPoly>{P("1")}));
    const auto w2 = section_span(m, WeightVec{{0, 1}});
    // minors of columns {1,2}: rows {1,2}, {1,3}, {2,3}
    EXPECT_EQ(std::set<MultiPoly>(w2.begin(), w2.end()), (std::set<MultiPoly>{P("1"), P("t2"), P("t2*t3")}));
    EXPECT_THROW(section_span(unipotent_product(Word{1, 2, 1, 2}, builtin_generators_C2()), WeightVec{{1, 0}}),
                 std::invalid_argument);
}

TEST(ValueSet, Examples) {
    const std::vector<MultiPoly> w1{P("1"), P("t1 + t3"), P("t1*t2")};
    EXPECT_EQ(value_set_of_span(w1, {Flavor::HI, 3}),
              (std::set<std::vector<int>>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}));
    EXPECT_EQ(value_set_of_span({P("t1 + t2^3")}, {Flavor::HI, 3}).size(), 1u);
    const auto alg =
        value_set_of_span({P("t1 + t3"), P("t2"), P("t1*t2")}, {Flavor::HI, 3}, Closure::PRODUCTS, 2);
    EXPECT_TRUE(alg.count({0, 1, 1}));
    for (const auto& v : alg) EXPECT_GE(v[1], v[2]);
}

TEST(ValueSet, CardinalityEqualsSpanRank) {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<MultiPoly> polys;
        for (int j = 0; j < 6; ++j) polys.push_back(random_poly(rng, 3, 2, 2));
        polys.push_back(polys[0] + polys[1]);
        polys.erase(std::remove_if(polys.begin(), polys.end(), [](const MultiPoly& p) { return p.is_zero(); }),
                    polys.end());
        for (Flavor f : {Flavor::HI, Flavor::TILDE})
            EXPECT_EQ(value_set_of_span(polys, {f, 3}).size(), span_rank(polys));
    }
}

TEST(ValueSet, A2SectionsMatchCrystal) {
    const auto m = unipotent_product(golden::kA2Word, builtin_generators_A(2));
    for (const WeightVec& lam : {WeightVec{{1, 0}}, WeightVec{{0, 1}}, WeightVec{{1, 1}}, WeightVec{{2, 1}}}) {
        const auto span = section_span(m, lam);
        const auto hi = value_set_of_span(span, {Flavor::HI, 3});
        EXPECT_EQ(PointSet(hi.begin(), hi.end()), enumerate_demazure(golden::a2(), golden::kA2Word, lam).coords);
        const auto tilde = value_set_of_span(span, {Flavor::TILDE, 3});
        EXPECT_EQ(PointSet(tilde.begin(), tilde.end()), string_points(golden::a2(), golden::kA2Word, lam));
    }
}

TEST(MultiPoly, Truncation) {
    EXPECT_EQ(P("t1 + t3 + t1*t2").truncated(2), MultiPoly::parse("t1 + t1*t2", 2));
    EXPECT_EQ(P("t1*t3 + 4").substitute_zero(3), P("4"));
    EXPECT_EQ(P("t1^3*t2").derivative(1), P("3*t1^2*t2"));
}
