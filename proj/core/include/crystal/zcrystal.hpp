#pragma once

#include "crystal/rootdata.hpp"

#include <optional>
#include <vector>

namespace crystal {

/// Infinite index sequence (..., i_k, ..., i_2, i_1): a base word followed by a
/// periodic tail cycling through 1..n, skipping a letter equal to its predecessor.
class SequenceSpec {
public:
    /// Base word used verbatim. Requires rank >= 2 and no equal adjacent letters.
    SequenceSpec(CartanMatrix cartan, Word base);

    /// Base = word completed to a reduced word for w_0 (finite type only).
    static SequenceSpec completed(const CartanMatrix& cartan, const Word& word);

    const CartanMatrix& cartan() const { return cartan_; }
    const Word& base() const { return base_; }
    int rank() const { return cartan_.rank(); }

    /// i_k for k >= 1.
    int letter(int k) const;

    /// Smallest k' > k with i_{k'} = i_k.
    int next_same(int k) const;
    /// Largest k' < k with i_{k'} = i_k, or 0.
    int prev_same(int k) const;
    /// Smallest k >= 1 with i_k = i.
    int first_occurrence(int i) const;

private:
    CartanMatrix cartan_;
    Word base_;
    int tail_shift_ = 0;
};

/// Finite-support element (a_1, a_2, ...) of Z^infinity. Stored densely with
/// trailing zeros trimmed, so equality is structural.
class ZElement {
public:
    ZElement() = default;
    explicit ZElement(std::vector<int> entries);

    /// a_k (k >= 1); zero beyond the stored support.
    int operator[](int k) const;
    /// Index of the last nonzero entry, 0 for the zero element.
    int top() const { return static_cast<int>(entries_.size()); }
    bool is_zero() const { return entries_.empty(); }
    const std::vector<int>& entries() const { return entries_; }

    /// (a_1, ..., a_len), zero-padded; throws if the support exceeds len.
    std::vector<int> padded(int len) const;

    ZElement with_added(int k, int delta) const;

    friend bool operator==(const ZElement&, const ZElement&) = default;
    friend auto operator<=>(const ZElement&, const ZElement&) = default;

private:
    void trim();
    std::vector<int> entries_;
};

struct CrystalData {
    int eps = 0;
    int phi = 0;
    RootCombo wt;
};

/// sigma_k(a) = a_k + sum_{j > k} <alpha_{i_j}, h_{i_k}> a_j.
int sigma_k(const SequenceSpec& spec, const ZElement& x, int k);

/// sigma^{(i)}(x) together with min and max of M^{(i)}(x); max_position is 0
/// when M^{(i)} is infinite (sigma^{(i)} = 0).
struct SigmaProfile {
    int value = 0;
    int min_position = 0;
    int max_position = 0;
};
SigmaProfile sigma_profile(const SequenceSpec& spec, const ZElement& x, int i);

RootCombo weight(const SequenceSpec& spec, const ZElement& x);
CrystalData eps_phi_wt(const SequenceSpec& spec, const ZElement& x, int i);
std::optional<ZElement> etilde(const SequenceSpec& spec, const ZElement& x, int i);
ZElement ftilde(const SequenceSpec& spec, const ZElement& x, int i);

/// b (x) r_lambda in Z^infinity[lambda].
struct LambdaTwist {
    ZElement body;
    WeightVec lambda;

    friend bool operator==(const LambdaTwist&, const LambdaTwist&) = default;
};

struct TwistData {
    int eps = 0;
    int phi = 0;
    WeightVec wt;  // wt(body) + lambda, fundamental-weight basis
    std::optional<LambdaTwist> e;
    std::optional<LambdaTwist> f;
};

/// Tensor product rule with right factor r_lambda, where eps_i(r_lambda) =
/// -<lambda, h_i>, phi_i(r_lambda) = 0 and both Kashiwara operators kill r_lambda.
TwistData twist_ops(const SequenceSpec& spec, const LambdaTwist& t, int i);

}  // namespace crystal
