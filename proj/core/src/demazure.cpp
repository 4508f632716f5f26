#include "crystal/demazure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crystal {

namespace {

void check_inputs(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda) {
    require_finite_type(cartan);
    require_dominant(lambda, cartan.rank());
    if (!is_reduced(cartan, word)) throw std::invalid_argument("word is not reduced: " + format_word(word));
}

}  // namespace

DemazureSet enumerate_demazure(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda) {
    check_inputs(cartan, word, lambda);
    const SequenceSpec spec = SequenceSpec::completed(cartan, word);
    const int r = static_cast<int>(word.size());

    std::map<ZElement, LambdaTwist> current;
    current.emplace(ZElement{}, LambdaTwist{ZElement{}, lambda});
    for (int j : word) {
        std::map<ZElement, LambdaTwist> next;
        for (const auto& [body, t] : current) {
            std::optional<LambdaTwist> cur = t;
            while (cur) {
                next.emplace(cur->body, *cur);
                cur = twist_ops(spec, *cur, j).f;
            }
        }
        current = std::move(next);
    }
    DemazureSet out{word, lambda, {}, {}};
    for (auto& [body, t] : current) {
        out.coords.insert(body.padded(r));
        out.elements.push_back(std::move(t));
    }
    return out;
}

BInfCut btilde_cut(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda) {
    check_inputs(cartan, word, lambda);
    const SequenceSpec spec = SequenceSpec::completed(cartan, word);
    const RootCombo budget = lowest_weight_gap(cartan, lambda);
    const int r = static_cast<int>(word.size());

    // -wt(x) <= lambda - w_0 lambda for every x in the cut, and every prefix of a
    // generating path has smaller -wt, so the budget never prunes a needed path.
    std::set<ZElement> current{ZElement{}};
    for (int j : word) {
        std::set<ZElement> next;
        for (const auto& x : current) {
            ZElement cur = x;
            int used = -weight(spec, cur).coords[j - 1];
            for (;;) {
                next.insert(cur);
                if (used + 1 > budget.coords[j - 1]) break;
                cur = ftilde(spec, cur, j);
                ++used;
            }
        }
        current = std::move(next);
    }
    BInfCut out;
    for (const auto& x : current) {
        const ZElement s = star(spec, x);
        bool inside = true;
        for (int i = 1; i <= cartan.rank() && inside; ++i) inside = eps_phi_wt(spec, s, i).eps <= lambda[i];
        if (!inside) continue;
        out.coords.insert(x.padded(r));
        out.elements.push_back(x);
    }
    return out;
}

GradedPointSet semigroup_points(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    GradedPointSet out;
    for (int k = 1; k <= k_max; ++k) out.levels[k] = enumerate_demazure(cartan, word, lambda.scaled(k)).coords;
    return out;
}

Word string_direction(const Word& word) { return Word(word.rbegin(), word.rend()); }

PointSet string_points(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda) {
    const BInfCut cut = btilde_cut(cartan, word, lambda);
    const SequenceSpec spec = SequenceSpec::completed(cartan, word);
    const Word dir = string_direction(word);
    PointSet out;
    for (const auto& x : cut.elements) out.insert(complete_string_param(spec, x, dir));
    return out;
}

LatticeBox delta_box(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda) {
    check_inputs(cartan, word, lambda);
    const RootCombo gap = lowest_weight_gap(cartan, lambda);
    LatticeBox box;
    for (int j : word) {
        box.lo.push_back(0);
        box.hi.push_back(gap.coords[j - 1]);
    }
    return box;
}

LatticeBox string_box(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda) {
    return delta_box(cartan, string_direction(word), lambda);
}

bool string_bounds_hold(const CartanMatrix& cartan, std::span<const int> direction, const WeightVec& lambda,
                              const Point& c) {
    if (c.size() != direction.size()) return false;
    RootCombo lowered{std::vector<int>(cartan.rank(), 0)};
    for (std::size_t m = direction.size(); m-- > 0;) {
        const int d = direction[m];
        const int bound = lambda[d] - cartan.pair(lowered, d);
        if (c[m] < 0 || c[m] > bound) return false;
        lowered.coords[d - 1] += c[m];
    }
    return true;
}

}  // namespace crystal
