#include "crystal/demazure.hpp"

#include "golden.hpp"

#include <gtest/gtest.h>

using namespace crystal;

namespace {

// Independent route to B_w(lambda): brute force over the box, keeping points
// whose lowering path from the highest weight element never hits zero.
PointSet brute_force_demazure(const CartanMatrix& cartan, const Word& word, const WeightVec& lam, int hi) {
    const SequenceSpec spec = SequenceSpec::completed(cartan, word);
    const int r = static_cast<int>(word.size());
    PointSet out;
    golden::for_box(r, hi, [&](const Point& a) {
        std::optional<LambdaTwist> t = LambdaTwist{ZElement{}, lam};
        for (int k = 1; k <= r && t; ++k)
            for (int m = 0; m < a[k - 1] && t; ++m) t = twist_ops(spec, *t, word[k - 1]).f;
        if (t && t->body.top() <= r) out.insert(t->body.padded(r));
    });
    return out;
}

std::vector<Word> reduced_words(const CartanMatrix& c) {
    std::vector<Word> out, frontier{{}};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int i = 1; i <= c.rank(); ++i) {
                Word x = w;
                x.push_back(i);
                if (is_reduced(c, x)) {
                    out.push_back(x);
                    next.push_back(x);
                }
            }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST(Demazure, Examples) {
    EXPECT_EQ(enumerate_demazure(golden::a2(), Word{1}, WeightVec{{1, 0}}).coords, (PointSet{{0}, {1}}));
    EXPECT_EQ(enumerate_demazure(golden::a2(), golden::kA2Word, WeightVec{{1, 0}}).coords,
              (PointSet{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}));
    EXPECT_EQ(enumerate_demazure(golden::c2(), Word{2, 1}, WeightVec{{0, 0}}).coords, (PointSet{{0, 0}}));
}

TEST(Demazure, Errors) {
    EXPECT_THROW(enumerate_demazure(golden::a2(), Word{1, 1}, WeightVec{{1, 0}}), std::invalid_argument);
    EXPECT_THROW(enumerate_demazure(golden::a2(), Word{1}, WeightVec{{-1, 0}}), std::invalid_argument);
    EXPECT_THROW(enumerate_demazure(CartanMatrix::from_rows({{2, -2}, {-2, 2}}), Word{1}, WeightVec{{1, 0}}),
                 std::invalid_argument);
}

TEST(Demazure, MatchesBruteForce) {
    for (const auto& c : {golden::a2(), golden::c2()})
        for (const auto& w : reduced_words(c))
            for (const WeightVec& lam : {WeightVec{{1, 0}}, WeightVec{{0, 1}}, WeightVec{{1, 1}}, WeightVec{{2, 1}}})
                EXPECT_EQ(enumerate_demazure(c, w, lam).coords, brute_force_demazure(c, w, lam, 6)) << format_word(w);
}

TEST(Demazure, SupportWithinWord) {
    const auto d = enumerate_demazure(golden::c2(), Word{2, 1}, WeightVec{{2, 2}});
    for (const auto& t : d.elements) EXPECT_LE(t.body.top(), 2);
}

TEST(Demazure, PrefixMonotone) {
    for (const auto& c : {golden::a2(), golden::c2()}) {
        const Word w0 = complete_to_longest(c, Word{});
        for (std::size_t k = 1; k < w0.size(); ++k) {
            const Word p(w0.begin(), w0.begin() + k), q(w0.begin(), w0.begin() + k + 1);
            const auto small = enumerate_demazure(c, p, WeightVec{{1, 2}}).coords;
            const auto big = enumerate_demazure(c, q, WeightVec{{1, 2}}).coords;
            for (auto pt : small) {
                pt.push_back(0);
                EXPECT_TRUE(big.count(pt));
            }
        }
    }
}

TEST(Demazure, LongestWordCountsMatchWeylDimension) {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'C', 2}, {'A', 3}, {'B', 2}, {'G', 2}}) {
        const auto c = CartanMatrix::builtin(f, n);
        const Word w0 = complete_to_longest(c, Word{});
        std::vector<WeightVec> lams{WeightVec{std::vector<int>(n, 1)}};
        for (int i = 0; i < n; ++i) {
            WeightVec w{std::vector<int>(n, 0)};
            w.coords[i] = 1;
            lams.push_back(w);
        }
        for (const auto& lam : lams)
            EXPECT_EQ(BigInt(enumerate_demazure(c, w0, lam).coords.size()), weyl_dim_oracle(c, lam)) << f << n;
    }
}

TEST(BTildeCut, Examples) {
    EXPECT_EQ(btilde_cut(golden::a2(), golden::kA2Word, WeightVec{{1, 0}}).coords,
              (PointSet{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}));
    EXPECT_EQ(btilde_cut(golden::a2(), golden::kA2Word, WeightVec{{0, 0}}).coords, (PointSet{{0, 0, 0}}));
    EXPECT_EQ(btilde_cut(golden::a2(), golden::kA2Word, WeightVec{{1, 1}}).coords.size(), 8u);
}

TEST(BTildeCut, EqualsDemazureOnAllWords) {
    for (const auto& c : {golden::a2(), golden::c2()})
        for (const auto& w : reduced_words(c))
            for (int l1 = 0; l1 <= 2; ++l1)
                for (int l2 = 0; l2 <= 2; ++l2) {
                    const WeightVec lam{{l1, l2}};
                    EXPECT_EQ(btilde_cut(c, w, lam).coords, enumerate_demazure(c, w, lam).coords) << format_word(w);
                }
}

TEST(Semigroup, Levels) {
    const auto g = semigroup_points(golden::a2(), golden::kA2Word, WeightVec{{1, 1}}, 2);
    EXPECT_EQ(g.levels.at(1).size(), 8u);
    EXPECT_EQ(g.levels.at(2).size(), 27u);
    EXPECT_EQ(semigroup_points(golden::a2(), golden::kA2Word, WeightVec{{1, 0}}, 1).levels.at(1).size(), 3u);
    const auto z = semigroup_points(golden::c2(), golden::kC2Word, WeightVec{{0, 0}}, 3);
    for (const auto& [k, pts] : z.levels) EXPECT_EQ(pts, (PointSet{{0, 0, 0, 0}}));
}

TEST(StringPoints, Examples) {
    EXPECT_EQ(string_points(golden::a2(), golden::kA2Word, WeightVec{{1, 0}}),
              (PointSet{{0, 0, 0}, {1, 0, 0}, {0, 1, 1}}));
    EXPECT_EQ(string_points(golden::a2(), golden::kA2Word, WeightVec{{0, 0}}), (PointSet{{0, 0, 0}}));
    const auto rho = string_points(golden::a2(), golden::kA2Word, WeightVec{{1, 1}});
    EXPECT_EQ(rho.size(), 8u);
    for (const auto& p : rho) EXPECT_TRUE(golden::a2_string(p, 1, 1));
}

TEST(StringPoints, BoundsHold) {
    for (const auto& c : {golden::a2(), golden::c2()})
        for (const auto& w : reduced_words(c))
            for (const WeightVec& lam : {WeightVec{{1, 1}}, WeightVec{{2, 1}}, WeightVec{{0, 2}}}) {
                const auto pts = string_points(c, w, lam);
                EXPECT_EQ(pts.size(), enumerate_demazure(c, w, lam).coords.size());
                for (const auto& p : pts) EXPECT_TRUE(string_bounds_hold(c, string_direction(w), lam, p));
            }
}

TEST(StringPoints, EtaBijectsOntoReversedWord) {
    for (const auto& [c, w] : std::vector<std::pair<CartanMatrix, Word>>{{golden::a2(), golden::kA2Word},
                                                                          {golden::c2(), golden::kC2Word},
                                                                          {golden::c2(), Word{2, 1, 2, 1}}}) {
        const SequenceSpec spec(c, w);
        const Word rev(w.rbegin(), w.rend());
        for (const WeightVec& lam : {WeightVec{{1, 1}}, WeightVec{{2, 0}}, WeightVec{{1, 2}}}) {
            const auto delta = enumerate_demazure(c, w, lam).coords;
            PointSet image;
            for (const auto& p : delta) image.insert(eta(spec, ZElement(p)));
            EXPECT_EQ(image.size(), delta.size());
            EXPECT_EQ(image, string_points(c, rev, lam));
        }
    }
}

// The exponent bound used for the boxes dominates every enumerated coordinate.
TEST(Boxes, ContainEnumeratedPoints) {
    for (const auto& c : {golden::a2(), golden::c2()})
        for (const auto& w : reduced_words(c)) {
            const WeightVec lam{{2, 1}};
            const auto box = delta_box(c, w, lam);
            for (const auto& p : enumerate_demazure(c, w, lam).coords) EXPECT_TRUE(box.contains(p));
            const auto sbox = string_box(c, w, lam);
            for (const auto& p : string_points(c, w, lam)) EXPECT_TRUE(sbox.contains(p));
        }
}

// The naive per-letter bound a_k <= lambda_{j_k} is not valid on its own.
TEST(Boxes, NaiveLetterBoundFails) {
    const auto pts = enumerate_demazure(golden::a2(), golden::kA2Word, WeightVec{{1, 1}}).coords;
    EXPECT_TRUE(pts.count({1, 2, 0}));
}
