#pragma once

#include "crystal/rational.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

/// Weight in the fundamental-weight basis: coords[i-1] = <lambda, h_i>.
struct WeightVec {
    std::vector<int> coords;

    int rank() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords.at(i - 1); }
    bool is_dominant() const;
    bool is_zero() const;
    WeightVec scaled(int k) const;

    friend bool operator==(const WeightVec&, const WeightVec&) = default;
};

/// Element of the root lattice in the simple-root basis: sum_j coords[j-1] alpha_j.
struct RootCombo {
    std::vector<int> coords;

    int rank() const { return static_cast<int>(coords.size()); }
    friend bool operator==(const RootCombo&, const RootCombo&) = default;
};

/// Generalized Cartan matrix with entries c(i, j) = <alpha_j, h_i>, indices 1-based.
class CartanMatrix {
public:
    /// Standard finite-type matrix. For C_n the long simple root is alpha_n, so
    /// c(n-1, n) = -2; for B_n the short one is alpha_n, so c(n, n-1) = -2.
    static CartanMatrix builtin(char family, int rank);

    /// Arbitrary symmetrizable GCM; throws std::invalid_argument on violated axioms.
    static CartanMatrix from_rows(std::vector<std::vector<int>> rows);

    int rank() const { return rank_; }
    int operator()(int i, int j) const { return entries_[(i - 1) * rank_ + (j - 1)]; }
    std::vector<std::vector<int>> rows() const;

    /// Positive integers d_i with d_i c(i,j) = d_j c(j,i).
    const std::vector<int>& symmetrizer() const { return symmetrizer_; }
    bool is_finite_type() const { return finite_; }
    std::optional<char> family() const { return family_; }

    /// <mu, h_i> for mu given in the simple-root basis.
    int pair(const RootCombo& mu, int i) const;
    WeightVec to_weight(const RootCombo& mu) const;

    friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
        return a.rank_ == b.rank_ && a.entries_ == b.entries_;
    }

private:
    CartanMatrix(int rank, std::vector<int> entries);

    int rank_ = 0;
    std::vector<int> entries_;
    std::vector<int> symmetrizer_;
    bool finite_ = false;
    std::optional<char> family_;
};

/// Word over I stored in application order: letters[0] = j_1 is applied first.
using Word = std::vector<int>;

Word parse_word(const std::string& text);
std::string format_word(std::span<const int> word);

/// s_i(lambda) = lambda - <lambda, h_i> alpha_i.
WeightVec reflect(const CartanMatrix& cartan, int i, const WeightVec& lambda);
RootCombo reflect(const CartanMatrix& cartan, int i, const RootCombo& mu);

/// True iff the word is reduced; detects a positive root sent negative.
bool is_reduced(const CartanMatrix& cartan, std::span<const int> word);

/// Positive roots in the simple-root basis. Finite type only.
std::vector<RootCombo> positive_roots(const CartanMatrix& cartan);

/// Extends a reduced word to a reduced word for the longest element by
/// appending the smallest letter that keeps the word reduced.
Word complete_to_longest(const CartanMatrix& cartan, std::span<const int> word);

/// lambda - w_0 lambda in the simple-root basis (all coordinates >= 0 for dominant lambda).
RootCombo lowest_weight_gap(const CartanMatrix& cartan, const WeightVec& lambda);

/// dim V(lambda) through the Weyl dimension formula.
BigInt weyl_dim_oracle(const CartanMatrix& cartan, const WeightVec& lambda);

void require_finite_type(const CartanMatrix& cartan);
void require_dominant(const WeightVec& lambda, int rank);
void require_letters(const CartanMatrix& cartan, std::span<const int> word);

}  // namespace crystal
