#include "crystal/binfinity.hpp"

namespace crystal {

namespace {

bool nonnegative(const ZElement& x) {
    for (int a : x.entries())
        if (a < 0) return false;
    return true;
}

}  // namespace

bool membership(const SequenceSpec& spec, const ZElement& x) {
    // Raising keeps members inside the image, and members are nonnegative, so
    // a negative entry certifies non-membership; the entry sum strictly drops.
    ZElement cur = x;
    for (;;) {
        if (!nonnegative(cur)) return false;
        bool moved = false;
        for (int i = 1; i <= spec.rank() && !moved; ++i) {
            if (auto up = etilde(spec, cur, i)) {
                cur = std::move(*up);
                moved = true;
            }
        }
        if (!moved) return cur.is_zero();
    }
}

ZElement star(const SequenceSpec& spec, const ZElement& x) {
    if (!membership(spec, x)) throw NotMemberError("star is only defined on the image of B(infinity)");
    ZElement out;
    for (int k = x.top(); k >= 1; --k)
        for (int m = 0; m < x[k]; ++m) out = ftilde(spec, out, spec.letter(k));
    return out;
}

int eps_star(const SequenceSpec& spec, const ZElement& x, int i) {
    return eps_phi_wt(spec, star(spec, x), i).eps;
}

StringParams string_param(const SequenceSpec& spec, const ZElement& x, std::span<const int> direction) {
    require_letters(spec.cartan(), direction);
    StringParams out;
    ZElement cur = x;
    for (int d : direction) {
        int count = 0;
        while (auto up = etilde(spec, cur, d)) {
            cur = std::move(*up);
            ++count;
        }
        out.values.push_back(count);
    }
    out.residue = std::move(cur);
    return out;
}

StringParams string_param(const SequenceSpec& spec, const LambdaTwist& x, std::span<const int> direction) {
    require_letters(spec.cartan(), direction);
    StringParams out;
    out.lambda = x.lambda;
    LambdaTwist cur = x;
    for (int d : direction) {
        int count = 0;
        for (;;) {
            TwistData data = twist_ops(spec, cur, d);
            if (!data.e) break;
            cur = std::move(*data.e);
            ++count;
        }
        out.values.push_back(count);
    }
    out.residue = std::move(cur.body);
    return out;
}

std::vector<int> complete_string_param(const SequenceSpec& spec, const ZElement& x,
                                       std::span<const int> direction) {
    StringParams p = string_param(spec, x, direction);
    if (!p.residue.is_zero())
        throw std::invalid_argument("string parameterization is incomplete: nonzero residue along direction " +
                                    format_word(direction));
    return p.values;
}

std::vector<int> eta(const SequenceSpec& spec, const ZElement& x) {
    if (!membership(spec, x)) throw NotMemberError("eta is only defined on the image of B(infinity)");
    const int n = static_cast<int>(spec.base().size());
    if (x.top() > n) throw std::invalid_argument("eta input has support beyond the longest word");
    return complete_string_param(spec, x, spec.base());
}

}  // namespace crystal
