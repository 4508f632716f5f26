#include "crystal/zcrystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystal {

SequenceSpec::SequenceSpec(CartanMatrix cartan, Word base) : cartan_(std::move(cartan)), base_(std::move(base)) {
    if (cartan_.rank() < 2)
        throw std::invalid_argument("index sequences need rank >= 2 (adjacent letters must differ)");
    require_letters(cartan_, base_);
    for (std::size_t k = 1; k < base_.size(); ++k)
        if (base_[k] == base_[k - 1]) throw std::invalid_argument("sequence has equal adjacent letters");
    tail_shift_ = (!base_.empty() && base_.back() == 1) ? 1 : 0;
}

SequenceSpec SequenceSpec::completed(const CartanMatrix& cartan, const Word& word) {
    return SequenceSpec(cartan, complete_to_longest(cartan, word));
}

int SequenceSpec::letter(int k) const {
    if (k < 1) throw std::out_of_range("sequence positions start at 1");
    const int len = static_cast<int>(base_.size());
    if (k <= len) return base_[k - 1];
    return (k - len - 1 + tail_shift_) % rank() + 1;
}

int SequenceSpec::next_same(int k) const {
    const int i = letter(k);
    int l = k + 1;
    while (letter(l) != i) ++l;
    return l;
}

int SequenceSpec::prev_same(int k) const {
    const int i = letter(k);
    for (int l = k - 1; l >= 1; --l)
        if (letter(l) == i) return l;
    return 0;
}

int SequenceSpec::first_occurrence(int i) const {
    int k = 1;
    while (letter(k) != i) ++k;
    return k;
}

ZElement::ZElement(std::vector<int> entries) : entries_(std::move(entries)) { trim(); }

void ZElement::trim() {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

int ZElement::operator[](int k) const {
    if (k < 1) throw std::out_of_range("sequence positions start at 1");
    return k <= top() ? entries_[k - 1] : 0;
}

std::vector<int> ZElement::padded(int len) const {
    if (top() > len) throw std::invalid_argument("element support exceeds requested length");
    std::vector<int> out(entries_);
    out.resize(len, 0);
    return out;
}

ZElement ZElement::with_added(int k, int delta) const {
    std::vector<int> out(entries_);
    if (static_cast<int>(out.size()) < k) out.resize(k, 0);
    out[k - 1] += delta;
    return ZElement(std::move(out));
}

int sigma_k(const SequenceSpec& spec, const ZElement& x, int k) {
    const int ik = spec.letter(k);
    int s = x[k];
    for (int j = k + 1; j <= x.top(); ++j) s += spec.cartan()(ik, spec.letter(j)) * x[j];
    return s;
}

SigmaProfile sigma_profile(const SequenceSpec& spec, const ZElement& x, int i) {
    const int n = spec.rank();
    const int top = x.top();
    // Suffix sums per letter give every sigma_k in one backward sweep.
    std::vector<int> suffix(n, 0);
    std::vector<int> sigma(top + 1, 0);
    for (int k = top; k >= 1; --k) {
        const int ik = spec.letter(k);
        int s = x[k];
        for (int l = 1; l <= n; ++l) s += spec.cartan()(ik, l) * suffix[l - 1];
        sigma[k] = s;
        suffix[ik - 1] += x[k];
    }
    // sigma_k = 0 for every k beyond the support; the first such k with i_k = i
    // stands for the whole (infinite) tail.
    int tail = top + 1;
    while (spec.letter(tail) != i) ++tail;

    SigmaProfile p{0, tail, 0};
    bool tail_is_max = true;
    for (int k = 1; k <= top; ++k) {
        if (spec.letter(k) != i) continue;
        if (sigma[k] > p.value) {
            p.value = sigma[k];
            p.min_position = p.max_position = k;
            tail_is_max = false;
        } else if (sigma[k] == p.value) {
            if (tail_is_max) {
                p.min_position = std::min(p.min_position, k);
            } else {
                p.max_position = k;
            }
        }
    }
    if (tail_is_max) p.max_position = 0;
    return p;
}

RootCombo weight(const SequenceSpec& spec, const ZElement& x) {
    RootCombo wt{std::vector<int>(spec.rank(), 0)};
    for (int k = 1; k <= x.top(); ++k) wt.coords[spec.letter(k) - 1] -= x[k];
    return wt;
}

CrystalData eps_phi_wt(const SequenceSpec& spec, const ZElement& x, int i) {
    CrystalData d;
    d.wt = weight(spec, x);
    d.eps = sigma_profile(spec, x, i).value;
    d.phi = d.eps + spec.cartan().pair(d.wt, i);
    return d;
}

std::optional<ZElement> etilde(const SequenceSpec& spec, const ZElement& x, int i) {
    const SigmaProfile p = sigma_profile(spec, x, i);
    if (p.value <= 0) return std::nullopt;
    return x.with_added(p.max_position, -1);
}

ZElement ftilde(const SequenceSpec& spec, const ZElement& x, int i) {
    return x.with_added(sigma_profile(spec, x, i).min_position, 1);
}

TwistData twist_ops(const SequenceSpec& spec, const LambdaTwist& t, int i) {
    require_dominant(t.lambda, spec.rank());
    const CrystalData body = eps_phi_wt(spec, t.body, i);
    const int eps_r = -t.lambda[i];
    const int phi_r = 0;
    const int wt_body_i = body.phi - body.eps;

    TwistData out;
    out.eps = std::max(body.eps, eps_r - wt_body_i);
    out.wt = spec.cartan().to_weight(body.wt);
    for (int l = 0; l < spec.rank(); ++l) out.wt.coords[l] += t.lambda.coords[l];
    out.phi = std::max(phi_r, body.phi + (phi_r - eps_r));
    // The operators act on the left factor exactly when the tensor rule routes
    // them there; otherwise they hit r_lambda and give 0.
    if (body.phi >= eps_r) {
        if (auto e = etilde(spec, t.body, i)) out.e = LambdaTwist{*e, t.lambda};
    }
    if (body.phi > eps_r) out.f = LambdaTwist{ftilde(spec, t.body, i), t.lambda};
    return out;
}

}  // namespace crystal
