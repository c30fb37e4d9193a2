#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfm/combination.hpp"
#include "gfm/distribution.hpp"
#include "gfm/frame.hpp"
#include "gfm/hint.hpp"
#include "gfm/mass_function.hpp"

namespace gfm {

/// A single observed value of the observation variable.
struct Observation {
  std::string label;

  friend bool operator==(const Observation&, const Observation&) = default;
};

std::vector<Observation> make_observations(const std::vector<std::string>& labels);

/// A generalized functional model (f, P): a total function f from
/// parameter x source to observation, and a known distribution P on the
/// source that does not depend on the parameter.
class FunctionalModel {
 public:
  /// `table[t * |omega| + o]` is the observation index of f(t, o). Throws
  /// ValidationError on frame-role, size, or range violations.
  FunctionalModel(Frame theta, Distribution source, Frame observations,
                  std::vector<std::size_t> table);

  /// Tabulates `f(t, o)` returning observation indices.
  static FunctionalModel tabulate(Frame theta, Distribution source, Frame observations,
                                  const std::function<std::size_t(std::size_t, std::size_t)>& f);

  const Frame& theta() const { return theta_; }
  const Frame& omega() const { return source_.frame(); }
  const Frame& observations() const { return observations_; }
  const Distribution& source() const { return source_; }

  std::size_t outcome(std::size_t t, std::size_t o) const {
    return table_.at(t * omega().size() + o);
  }

  friend bool operator==(const FunctionalModel&, const FunctionalModel&) = default;

 private:
  Frame theta_;
  Distribution source_;
  Frame observations_;
  std::vector<std::size_t> table_;
};

/// Source outcomes that could have produced the observation, v_x(omega).
Subset compatible_outcomes(const FunctionalModel& model, const Observation& x);

/// Parameter values consistent with observation x under source outcome o.
/// Throws IncompatibleOutcome when that set would be empty.
Subset gamma(const FunctionalModel& model, const Observation& x, std::size_t o);
Subset gamma(const FunctionalModel& model, const Observation& x, std::string_view o);

/// Hint generated by one observation: P conditioned on the compatible
/// outcomes, each mapped to its gamma set. Throws ImpossibleObservation when
/// the compatible outcomes have probability zero.
Hint hint_from_observation(const FunctionalModel& model, const Observation& x);

/// Combination of the per-observation hints, with the prior's precise hint
/// folded in first when supplied. Throws ImpossibleObservation or
/// TotalConflict.
Combination infer_detailed(const FunctionalModel& model, std::span<const Observation> xs,
                           const std::optional<Distribution>& prior = std::nullopt);

MassFunction infer(const FunctionalModel& model, std::span<const Observation> xs,
                   const std::optional<Distribution>& prior = std::nullopt);

/// Conditional table Pr(x | t) induced by a functional model.
class DistributionModel {
 public:
  DistributionModel(Frame theta, Frame observations, std::vector<Rational> table);

  const Frame& theta() const { return theta_; }
  const Frame& observations() const { return observations_; }
  const Rational& probability(std::size_t t, std::size_t x) const {
    return table_.at(t * observations_.size() + x);
  }

  friend bool operator==(const DistributionModel&, const DistributionModel&) = default;

 private:
  Frame theta_;
  Frame observations_;
  std::vector<Rational> table_;
};

DistributionModel distribution_model(const FunctionalModel& model);

/// Posterior over theta for iid observations. Throws ZeroEvidence when the
/// observations are impossible under the prior.
Distribution bayes_posterior(const DistributionModel& dm, const Distribution& prior,
                             std::span<const Observation> xs);

struct BayesConsistencyReport {
  MassFunction hint_result;  // infer with the prior
  Distribution posterior;    // Bayes with the same prior
  bool agree = false;

  // Filled only when infer without a prior is precise.
  std::optional<MassFunction> unprimed_result;
  std::optional<Distribution> uniform_posterior;
  std::optional<bool> uniform_agree;

  bool passed() const { return agree && uniform_agree.value_or(true); }
};

/// Compares the prior-combined hint with the Bayes posterior and, when the
/// observation hint alone is already precise, that hint with the
/// uniform-prior posterior.
BayesConsistencyReport check_bayes_consistency(const FunctionalModel& model,
                                               const Distribution& prior,
                                               std::span<const Observation> xs);

/// True when the precise mass `m` assigns exactly `p` to every singleton.
bool matches_distribution(const MassFunction& m, const Distribution& p);

}  // namespace gfm
