#pragma once

#include "crystal/polytope.hpp"
#include "crystal/zcrystal.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

/// psi(a) = c0 + sum_i lambda_coeffs[i-1] * lambda_i + sum_k coeffs[k] * a_k.
/// The weight enters symbolically so one closure serves every dilation k*lambda.
struct AffineForm {
    std::map<int, Rational> coeffs;  // no zero values stored
    Rational c0 = 0;
    std::vector<Rational> lambda_coeffs;

    static AffineForm zero(int rank);
    static AffineForm coordinate(int k, int rank);

    Rational coeff(int k) const;
    Rational constant_at(const WeightVec& lambda) const;
    Rational evaluate(const WeightVec& lambda, const Point& a) const;
    bool is_zero() const;
    bool has_symbolic_constant() const;

    /// a_k := 0 for k > r.
    AffineForm restricted(int r) const;

    AffineForm& add_scaled(const AffineForm& other, const Rational& factor);

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
    friend bool operator<(const AffineForm& x, const AffineForm& y);
};

std::string to_string(const AffineForm& form);

/// beta_k^(+)(a) = a_k + sum_{k<j<k+} <alpha_{i_j}, h_{i_k}> a_j + a_{k+}.
AffineForm beta_plus(const SequenceSpec& spec, int k);
/// beta_k^(-): the mirror form toward k^(-), or the lambda-shifted form when k^(-) = 0.
AffineForm beta_minus(const SequenceSpec& spec, int k);
/// lambda^(i)(a) = lambda_i - sum_{j < first(i)} <alpha_{i_j}, h_i> a_j - a_{first(i)}.
AffineForm lambda_form(const SequenceSpec& spec, int i);

/// psi - psi_k beta_k^(+) if psi_k > 0, psi - psi_k beta_k^(-) otherwise.
AffineForm shat(const SequenceSpec& spec, int k, const AffineForm& psi);

class UncertifiedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAmpleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct XiSet {
    std::vector<AffineForm> forms;  // closure inside the window, sorted
    int window = 0;
    int depth_used = 0;
    bool closed = false;         // one more round adds nothing
    bool window_stable = false;  // window + rank yields the same restricted set
    bool certified = false;
};

/// Closure of the seeds {a_j : j <= window} and {lambda^(i)} under S^_1..S^_window,
/// deduplicated, for at most depth_cap rounds. seeds_override replaces the seed set.
XiSet generate_xi(const SequenceSpec& spec, int window, int depth_cap,
                  const std::optional<std::vector<AffineForm>>& seeds_override = std::nullopt);

/// Distinct nonzero forms restricted to positions 1..r.
std::vector<AffineForm> restrict_forms(const std::vector<AffineForm>& forms, int r);

/// psi(0) >= 0 at lambda for every generated psi. Throws UncertifiedError.
bool ample_check(const XiSet& xi, const WeightVec& lambda);

/// Inequalities psi(a_1..a_r) >= 0 describing Delta for a word of length r.
/// Without lambda the constants stay symbolic; with lambda the pair must be
/// ample (NotAmpleError otherwise) and the constants are evaluated.
std::vector<AffineForm> delta_hrep(const XiSet& xi, int r, const std::optional<WeightVec>& lambda = std::nullopt);

/// Evaluates the symbolic constants at lambda and builds the half-space system.
HalfSpaceSystem to_system(const std::vector<AffineForm>& forms, int r, const WeightVec& lambda);

/// One line per row: `c0 + c1*L1 + ... + cn*Ln + p1*a1 + ... + pr*ar >= 0`.
std::string format_hrep_text(const std::vector<AffineForm>& forms, int rank, int r);

}  // namespace crystal
