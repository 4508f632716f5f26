#pragma once

#include "crystal/binfinity.hpp"
#include "crystal/polytope.hpp"

#include <vector>

namespace crystal {

/// Demazure crystal B_w(lambda) embedded in Z^infinity[lambda]: every element
/// f~_{j_r}^{a_r} ... f~_{j_1}^{a_1} (0 (x) r_lambda) that is not 0.
struct DemazureSet {
    Word word;
    WeightVec lambda;
    std::vector<LambdaTwist> elements;  // sorted by body
    PointSet coords;                    // (a_1, ..., a_r)
};

DemazureSet enumerate_demazure(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda);

/// {x in B_w(infinity) : eps*_i(x) <= lambda_i for all i}, generated with the
/// exponent budget lambda - w_0 lambda.
struct BInfCut {
    std::vector<ZElement> elements;
    PointSet coords;
};

BInfCut btilde_cut(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda);

/// Level k holds the coordinates of B_w(k lambda).
GradedPointSet semigroup_points(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda, int k_max);

/// Direction used for string parameters of B_w: the last applied letter first,
/// i.e. (j_r, ..., j_1).
Word string_direction(const Word& word);

/// String parameters of every element of btilde_cut(word, lambda).
PointSet string_points(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda);

/// 0 <= a_k <= coefficient of alpha_{j_k} in lambda - w_0 lambda.
LatticeBox delta_box(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda);
/// Same bound along string_direction(word).
LatticeBox string_box(const CartanMatrix& cartan, const Word& word, const WeightVec& lambda);

/// Nested bounds 0 <= c_m <= <lambda, h_{d_m}>, 0 <= c_{m-1} <= <lambda - c_m alpha_{d_m}, h_{d_{m-1}}>, ...
/// for string parameters c along direction d.
bool string_bounds_hold(const CartanMatrix& cartan, std::span<const int> direction, const WeightVec& lambda,
                              const Point& c);

}  // namespace crystal
