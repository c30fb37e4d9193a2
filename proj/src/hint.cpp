#include "gfm/hint.hpp"

#include <unordered_set>

#include "gfm/errors.hpp"

namespace gfm {

Hint::Hint(Frame theta, std::vector<HintOutcome> outcomes) : theta_(std::move(theta)) {
  std::unordered_set<std::string> seen;
  Rational total;
  outcomes_.reserve(outcomes.size());
  for (auto& o : outcomes) {
    if (!seen.insert(o.label).second) {
      throw ValidationError("duplicate hint outcome '" + o.label + "'");
    }
    if (o.probability.sign() < 0) {
      throw ValidationError("negative probability for hint outcome '" + o.label + "'");
    }
    if (!(o.focal.frame() == theta_)) {
      throw ValidationError("hint outcome '" + o.label + "' maps outside the parameter frame");
    }
    if (o.focal.empty()) {
      throw ValidationError("hint outcome '" + o.label + "' maps to the empty set");
    }
    total += o.probability;
    if (o.probability.is_zero()) continue;
    outcomes_.push_back(std::move(o));
  }
  if (total != Rational(1)) {
    throw ValidationError("hint probabilities sum to " + total.str() + ", not 1");
  }
}

MassFunction mass_from_hint(const Hint& hint) {
  MassFunction::FocalMap focal;
  for (const auto& o : hint.outcomes()) focal[o.focal.bits()] += o.probability;
  return MassFunction(hint.theta(), std::move(focal));
}

bool is_precise(const Hint& hint) {
  for (const auto& o : hint.outcomes()) {
    if (o.focal.size() != 1) return false;
  }
  return true;
}

Hint prior_hint(const Distribution& prior) {
  const Frame& theta = prior.frame();
  if (theta.role() != FrameRole::parameter) {
    throw ValidationError("a prior must be a distribution over the parameter frame");
  }
  std::vector<HintOutcome> outcomes;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    outcomes.push_back({theta.label(i), prior[i], theta.singleton(i)});
  }
  return Hint(theta, std::move(outcomes));
}

}  // namespace gfm
