#include "gfm/builtin_models.hpp"

#include <algorithm>
#include <array>

#include "gfm/errors.hpp"

namespace gfm {

namespace {

constexpr std::array<std::pair<BuiltinName, std::string_view>, 5> kNames{{
    {BuiltinName::pregnancy, "pregnancy"},
    {BuiltinName::policy1, "policy1"},
    {BuiltinName::policy2, "policy2"},
    {BuiltinName::nonid_vacuous, "nonid_vacuous"},
    {BuiltinName::nonid_precise, "nonid_precise"},
}};

Rational probability_parameter(const BuiltinSpec& spec, const std::string& key) {
  const auto it = spec.parameters.find(key);
  if (it == spec.parameters.end()) {
    throw ValidationError(std::string(to_string(spec.name)) + " requires parameter '" + key + "'");
  }
  if (it->second.sign() < 0 || it->second > Rational(1)) {
    throw ValidationError("parameter '" + key + "' = " + it->second.str() + " is outside [0, 1]");
  }
  return it->second;
}

Frame coin_frame() { return Frame({"o1", "o2"}, FrameRole::source); }
Frame heads_tails() { return Frame({"H", "T"}, FrameRole::observation); }

constexpr std::size_t kT1 = 0, kT2 = 1;
constexpr std::size_t kHeads = 0, kTails = 1;

FunctionalModel make_pregnancy(const Rational& p) {
  // theta and x are ordered {-1, +1}; omega is ordered {+1, -1}.
  const Frame omega({"+1", "-1"}, FrameRole::source);
  const Frame x({"-1", "+1"}, FrameRole::observation);
  const std::array<int, 2> theta_value{-1, +1};
  const std::array<int, 2> omega_value{+1, -1};
  return FunctionalModel::tabulate(pregnancy_theta(), Distribution(omega, {p, Rational(1) - p}), x,
                                   [&](std::size_t t, std::size_t o) -> std::size_t {
                                     return theta_value[t] * omega_value[o] < 0 ? 0 : 1;
                                   });
}

FunctionalModel make_policy1() {
  return FunctionalModel::tabulate(
      policy_theta(), Distribution::uniform(coin_frame()), heads_tails(),
      [](std::size_t t, std::size_t o) { return t == kT1 && o == 1 ? kTails : kHeads; });
}

FunctionalModel make_policy2(const Rational& p1, const Rational& p2) {
  const Frame omega({"o1o1'", "o1o2'", "o2o1'", "o2o2'"}, FrameRole::source);
  const Rational q1 = Rational(1) - p1;
  const Rational q2 = Rational(1) - p2;
  Distribution source(omega, {p1 * p2, p1 * q2, q1 * p2, q1 * q2});
  // Outcome index o = 2 * red + blue, 0 meaning heads for either coin.
  return FunctionalModel::tabulate(policy_theta(), std::move(source), heads_tails(),
                                   [](std::size_t t, std::size_t o) -> std::size_t {
                                     const std::size_t red = o / 2;
                                     const std::size_t blue = o % 2;
                                     return t == kT1 ? red : blue;
                                   });
}

FunctionalModel make_nonid(bool precise) {
  return FunctionalModel::tabulate(policy_theta(), Distribution::uniform(coin_frame()),
                                   heads_tails(), [precise](std::size_t t, std::size_t o) {
                                     if (!precise || t == kT1) return o == 0 ? kHeads : kTails;
                                     return o == 0 ? kTails : kHeads;
                                   });
}

}  // namespace

std::string_view to_string(BuiltinName name) {
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  return "unknown";
}

std::optional<BuiltinName> parse_builtin_name(std::string_view text) {
  for (const auto& [n, s] : kNames) {
    if (s == text) return n;
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& entry : kNames) out.emplace_back(entry.second);
  return out;
}

std::vector<std::string> required_parameters(BuiltinName name) {
  switch (name) {
    case BuiltinName::pregnancy: return {"p"};
    case BuiltinName::policy2: return {"p1", "p2"};
    default: return {};
  }
}

FunctionalModel build(const BuiltinSpec& spec) {
  const auto required = required_parameters(spec.name);
  for (const auto& [key, value] : spec.parameters) {
    if (std::find(required.begin(), required.end(), key) == required.end()) {
      throw ValidationError(std::string(to_string(spec.name)) + " has no parameter '" + key + "'");
    }
  }
  switch (spec.name) {
    case BuiltinName::pregnancy: return make_pregnancy(probability_parameter(spec, "p"));
    case BuiltinName::policy1: return make_policy1();
    case BuiltinName::policy2:
      return make_policy2(probability_parameter(spec, "p1"), probability_parameter(spec, "p2"));
    case BuiltinName::nonid_vacuous: return make_nonid(false);
    case BuiltinName::nonid_precise: return make_nonid(true);
  }
  throw ValidationError("unknown built-in model");
}

Frame pregnancy_theta() { return Frame({"-1", "+1"}, FrameRole::parameter); }
Frame policy_theta() { return Frame({"t1", "t2"}, FrameRole::parameter); }

PregnancySupport closed_form_pregnancy(unsigned n, unsigned k, const Rational& p) {
  if (k > n) throw ValidationError("more positive results than tests");
  if (n == 0) return {Rational(), Rational()};
  const Rational q = Rational(1) - p;
  const Rational for_negative = q.pow(k) * p.pow(n - k);
  const Rational for_positive = p.pow(k) * q.pow(n - k);
  const Rational denominator = for_negative + for_positive;
  if (denominator.is_zero()) throw TotalConflict("test results are incompatible for this p");
  return {for_negative / denominator, for_positive / denominator};
}

MassFunction closed_form_policy1(unsigned n, unsigned k) {
  if (k > n) throw ValidationError("more heads than reports");
  const Frame theta = policy_theta();
  if (n == 0) return vacuous_mass(theta);
  if (k < n) return MassFunction(theta, {{Mask{1} << kT1, Rational(1)}});
  const Rational ignorance = Rational(1, 2).pow(n);
  return MassFunction(theta, {{Mask{1} << kT2, Rational(1) - ignorance},
                              {theta.full_mask(), ignorance}});
}

MassFunction closed_form_policy2(unsigned n, unsigned k, const Rational& p1, const Rational& p2) {
  if (k > n) throw ValidationError("more heads than reports");
  const Frame theta = policy_theta();
  if (n == 0) return vacuous_mass(theta);
  const Rational q1 = Rational(1) - p1;
  const Rational q2 = Rational(1) - p2;
  const Rational red = p1.pow(k) * q1.pow(n - k);
  const Rational blue = p2.pow(k) * q2.pow(n - k);
  const Rational both = (p1 * p2).pow(k) * (q1 * q2).pow(n - k);
  const Rational n1 = red - both;
  const Rational n2 = blue - both;
  const Rational d = red + blue - both;
  if (d.is_zero()) throw TotalConflict("reports are incompatible with both policies");
  MassFunction::FocalMap focal;
  if (!n1.is_zero()) focal.emplace(Mask{1} << kT1, n1 / d);
  if (!n2.is_zero()) focal.emplace(Mask{1} << kT2, n2 / d);
  if (!both.is_zero()) focal.emplace(theta.full_mask(), both / d);
  return MassFunction(theta, std::move(focal));
}

}  // namespace gfm
