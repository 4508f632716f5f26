#pragma once

#include "crystal/rootdata.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

using Exponent = std::vector<int>;

/// Polynomial in t_1..t_r with exact rational coefficients.
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int k);
    static MultiPoly monomial(const Exponent& e, const Rational& c);

    /// Integer-coefficient expression over t1..tr with + - * ^ and parentheses.
    static MultiPoly parse(const std::string& text, int nvars);

    int nvars() const { return nvars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    int degree_in(int k) const;

    void add_term(const Exponent& e, const Rational& c);

    MultiPoly derivative(int k) const;
    /// t_k := 0
    MultiPoly substitute_zero(int k) const;
    /// t_k := 0 for k > r, then keep the first r variables.
    MultiPoly truncated(int r) const;
    MultiPoly pow(int e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
    friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.terms_ < b.terms_; }

private:
    int nvars_ = 0;
    std::map<Exponent, Rational> terms_;
};

std::string to_string(const MultiPoly& f);

enum class Flavor { HI, TILDE };

/// HI: lex with t_1 > ... > t_r, value -(a_1, ..., a_r).
/// TILDE: lex with t_r > ... > t_1, value -(a_r, ..., a_1).
struct ValuationOrder {
    Flavor flavor = Flavor::HI;
    int r = 0;
};

class ZeroPolynomialError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exponent of the leading monomial under the order (in t_1..t_r coordinates).
Exponent leading_exponent(const MultiPoly& f, Flavor flavor);

std::vector<int> value(const MultiPoly& f, const ValuationOrder& ord);

struct RationalFunction {
    MultiPoly num;
    MultiPoly den;
};

std::vector<int> value(const RationalFunction& f, const ValuationOrder& ord);

/// a_k = largest derivative order in t_k that stays nonzero; differentiate that
/// often, set t_k = 0, continue with k + 1. Returns (a_1, ..., a_r).
std::vector<int> chevalley_value(const MultiPoly& f);

using RMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// generators[i-1] = F_i. Natural representation of A_n: F_i = E_{i+1,i}.
std::vector<RMatrix> builtin_generators_A(int n);
/// 4-dimensional representation of C_2 (c(1,2) = -2): F_1 = E_21 + E_43, F_2 = E_32.
std::vector<RMatrix> builtin_generators_C2();
/// Built-in generators for the Cartan matrix, or std::invalid_argument.
std::vector<RMatrix> builtin_generators(const CartanMatrix& cartan);

/// exp(t_r F_{j_r}) ... exp(t_1 F_{j_1}). Throws on a non-nilpotent generator.
PolyMatrix unipotent_product(const Word& word, const std::vector<RMatrix>& generators);

/// Generating list for the sections of L_lambda divided by tau_lambda, as
/// matrix coefficients of u v_lambda: d x d minors of the first d columns for
/// omega_d, products of such minors for sums. Type A built-ins only.
std::vector<MultiPoly> section_span(const PolyMatrix& m, const WeightVec& lambda);

enum class Closure { NONE, PRODUCTS };

/// Achieved values -value(f) over the linear span (NONE), or over the span of
/// all products of at most degree_cap generators (PRODUCTS), by exact
/// elimination against the monomial order.
std::set<std::vector<int>> value_set_of_span(const std::vector<MultiPoly>& polys, const ValuationOrder& ord,
                                             Closure closure = Closure::NONE, int degree_cap = 0);

/// Dimension of the linear span.
std::size_t span_rank(const std::vector<MultiPoly>& polys);

}  // namespace crystal
