#pragma once

#include "crystal/zcrystal.hpp"

#include <stdexcept>
#include <vector>

namespace crystal {

class NotMemberError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True iff x lies in the image of B(infinity): greedy raising (ascending index
/// order) until every eps_i vanishes must end at the zero element.
bool membership(const SequenceSpec& spec, const ZElement& x);

/// Coordinates of b* for x = Psi(b): f~_{i_1}^{a_1} f~_{i_2}^{a_2} ... applied to 0.
/// Throws NotMemberError for non-members.
ZElement star(const SequenceSpec& spec, const ZElement& x);

/// eps_i(star(x)).
int eps_star(const SequenceSpec& spec, const ZElement& x, int i);

struct StringParams {
    std::vector<int> values;
    ZElement residue;        // what is left after the reductions
    std::optional<WeightVec> lambda;  // set when the input was a LambdaTwist
};

/// c_1 = eps_{d_1}(x), x <- e~_{d_1}^max x, c_2 = eps_{d_2}(x), ...
StringParams string_param(const SequenceSpec& spec, const ZElement& x, std::span<const int> direction);
StringParams string_param(const SequenceSpec& spec, const LambdaTwist& x, std::span<const int> direction);

/// Same as string_param but throws when the residue is not the zero element.
std::vector<int> complete_string_param(const SequenceSpec& spec, const ZElement& x,
                                       std::span<const int> direction);

/// Transition map on Psi(B(infinity)) for a reduced word of w_0 (the spec's base):
/// string parameters of x along (j_1, ..., j_N). Equals the coordinates of the
/// star involution, so eta(eta(x)) = x.
std::vector<int> eta(const SequenceSpec& spec, const ZElement& x);

}  // namespace crystal
