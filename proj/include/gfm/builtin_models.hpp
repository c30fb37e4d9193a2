#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfm/functional_model.hpp"
#include "gfm/mass_function.hpp"
#include "gfm/rational.hpp"

namespace gfm {

// pregnancy  - noisy test with f(t, o) = t * o, P(o = +1) = p
// policy1    - honest reporter vs. always-heads reporter, fair coin
// policy2    - red coin vs. blue coin reporter, P(heads) = p1 and p2
// nonid_*    - two models with the same conditional table Pr(x | t) but
//              different hints: one ignores t, the other is precise
enum class BuiltinName { pregnancy, policy1, policy2, nonid_vacuous, nonid_precise };

std::string_view to_string(BuiltinName name);
std::optional<BuiltinName> parse_builtin_name(std::string_view text);
std::vector<std::string> builtin_names();
std::vector<std::string> required_parameters(BuiltinName name);

struct BuiltinSpec {
  BuiltinName name;
  std::map<std::string, Rational> parameters;
};

/// Throws ValidationError on a missing, unexpected, or out-of-range
/// parameter (all parameters are probabilities in [0, 1]).
FunctionalModel build(const BuiltinSpec& spec);

/// {-1, +1} for the pregnancy model; {t1, t2} for every other built-in.
Frame pregnancy_theta();
Frame policy_theta();

struct PregnancySupport {
  Rational negative;  // sp(-1), not pregnant
  Rational positive;  // sp(+1), pregnant
};

/// Support after n tests of which k were positive. n = 0 yields the vacuous
/// result (both zero). Throws TotalConflict when the normalizer vanishes and
/// ValidationError when k > n.
PregnancySupport closed_form_pregnancy(unsigned n, unsigned k, const Rational& p);

/// Combined hint after n reports of which k were heads.
MassFunction closed_form_policy1(unsigned n, unsigned k);

/// Combined hint after n reports of which k were heads, from the
/// N1 / N2 / D expressions. Throws TotalConflict when D = 0.
MassFunction closed_form_policy2(unsigned n, unsigned k, const Rational& p1, const Rational& p2);

}  // namespace gfm
