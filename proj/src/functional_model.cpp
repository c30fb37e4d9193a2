#include "gfm/functional_model.hpp"

#include "gfm/errors.hpp"

namespace gfm {

std::vector<Observation> make_observations(const std::vector<std::string>& labels) {
  std::vector<Observation> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(Observation{l});
  return out;
}

FunctionalModel::FunctionalModel(Frame theta, Distribution source, Frame observations,
                                 std::vector<std::size_t> table)
    : theta_(std::move(theta)),
      source_(std::move(source)),
      observations_(std::move(observations)),
      table_(std::move(table)) {
  if (theta_.role() != FrameRole::parameter) {
    throw ValidationError("model parameter frame must have the parameter role");
  }
  if (source_.frame().role() != FrameRole::source) {
    throw ValidationError("model source frame must have the source role");
  }
  if (observations_.role() != FrameRole::observation) {
    throw ValidationError("model observation frame must have the observation role");
  }
  if (table_.size() != theta_.size() * omega().size()) {
    throw ValidationError("function table must cover every (parameter, source) pair");
  }
  for (std::size_t x : table_) {
    if (x >= observations_.size()) throw ValidationError("function value outside the observation frame");
  }
}

FunctionalModel FunctionalModel::tabulate(
    Frame theta, Distribution source, Frame observations,
    const std::function<std::size_t(std::size_t, std::size_t)>& f) {
  std::vector<std::size_t> table;
  table.reserve(theta.size() * source.frame().size());
  for (std::size_t t = 0; t < theta.size(); ++t) {
    for (std::size_t o = 0; o < source.frame().size(); ++o) table.push_back(f(t, o));
  }
  return FunctionalModel(std::move(theta), std::move(source), std::move(observations),
                         std::move(table));
}

namespace {

Mask gamma_bits(const FunctionalModel& model, std::size_t x, std::size_t o) {
  Mask bits = 0;
  for (std::size_t t = 0; t < model.theta().size(); ++t) {
    if (model.outcome(t, o) == x) bits |= Mask{1} << t;
  }
  return bits;
}

}  // namespace

Subset compatible_outcomes(const FunctionalModel& model, const Observation& x) {
  const std::size_t xi = model.observations().index_of(x.label);
  Mask bits = 0;
  for (std::size_t o = 0; o < model.omega().size(); ++o) {
    if (gamma_bits(model, xi, o) != 0) bits |= Mask{1} << o;
  }
  return model.omega().subset(bits);
}

Subset gamma(const FunctionalModel& model, const Observation& x, std::size_t o) {
  const std::size_t xi = model.observations().index_of(x.label);
  if (o >= model.omega().size()) throw ValidationError("source index out of range");
  const Mask bits = gamma_bits(model, xi, o);
  if (bits == 0) {
    throw IncompatibleOutcome("source outcome '" + model.omega().label(o) +
                              "' cannot produce observation '" + x.label + "'");
  }
  return model.theta().subset(bits);
}

Subset gamma(const FunctionalModel& model, const Observation& x, std::string_view o) {
  return gamma(model, x, model.omega().index_of(o));
}

Hint hint_from_observation(const FunctionalModel& model, const Observation& x) {
  const Subset compatible = compatible_outcomes(model, x);
  const Rational mass = model.source().measure(compatible);
  if (mass.is_zero()) {
    throw ImpossibleObservation("observation '" + x.label + "' has probability zero under the model");
  }
  std::vector<HintOutcome> outcomes;
  for (std::size_t o : compatible.indices()) {
    outcomes.push_back({model.omega().label(o), model.source()[o] / mass, gamma(model, x, o)});
  }
  return Hint(model.theta(), std::move(outcomes));
}

Combination infer_detailed(const FunctionalModel& model, std::span<const Observation> xs,
                           const std::optional<Distribution>& prior) {
  std::vector<MassFunction> masses;
  masses.reserve(xs.size() + 1);
  if (prior) {
    require_same_frame(model.theta(), prior->frame(), "prior");
    masses.push_back(mass_from_hint(prior_hint(*prior)));
  }
  for (const auto& x : xs) masses.push_back(mass_from_hint(hint_from_observation(model, x)));
  return combine_all(model.theta(), masses);
}

MassFunction infer(const FunctionalModel& model, std::span<const Observation> xs,
                   const std::optional<Distribution>& prior) {
  return infer_detailed(model, xs, prior).mass;
}

DistributionModel::DistributionModel(Frame theta, Frame observations, std::vector<Rational> table)
    : theta_(std::move(theta)), observations_(std::move(observations)), table_(std::move(table)) {
  if (table_.size() != theta_.size() * observations_.size()) {
    throw ValidationError("distribution model table has the wrong size");
  }
  for (std::size_t t = 0; t < theta_.size(); ++t) {
    Rational row;
    for (std::size_t x = 0; x < observations_.size(); ++x) {
      if (probability(t, x).sign() < 0) throw ValidationError("negative conditional probability");
      row += probability(t, x);
    }
    if (row != Rational(1)) {
      throw ValidationError("conditional probabilities for '" + theta_.label(t) + "' sum to " +
                            row.str());
    }
  }
}

DistributionModel distribution_model(const FunctionalModel& model) {
  const std::size_t nx = model.observations().size();
  std::vector<Rational> table(model.theta().size() * nx);
  for (std::size_t t = 0; t < model.theta().size(); ++t) {
    for (std::size_t o = 0; o < model.omega().size(); ++o) {
      table[t * nx + model.outcome(t, o)] += model.source()[o];
    }
  }
  return DistributionModel(model.theta(), model.observations(), std::move(table));
}

Distribution bayes_posterior(const DistributionModel& dm, const Distribution& prior,
                             std::span<const Observation> xs) {
  require_same_frame(dm.theta(), prior.frame(), "Bayes prior");
  std::vector<std::size_t> indices;
  indices.reserve(xs.size());
  for (const auto& x : xs) indices.push_back(dm.observations().index_of(x.label));

  std::vector<Rational> joint(dm.theta().size());
  Rational evidence;
  for (std::size_t t = 0; t < joint.size(); ++t) {
    Rational w = prior[t];
    for (std::size_t x : indices) {
      if (w.is_zero()) break;
      w *= dm.probability(t, x);
    }
    evidence += w;
    joint[t] = std::move(w);
  }
  if (evidence.is_zero()) throw ZeroEvidence("observations have zero probability under the prior");
  for (auto& w : joint) w /= evidence;
  return Distribution(dm.theta(), std::move(joint));
}

bool matches_distribution(const MassFunction& m, const Distribution& p) {
  if (!(m.frame() == p.frame()) || !is_precise(m)) return false;
  for (std::size_t t = 0; t < p.frame().size(); ++t) {
    if (m.weight(p.frame().singleton(t)) != p[t]) return false;
  }
  return true;
}

BayesConsistencyReport check_bayes_consistency(const FunctionalModel& model,
                                               const Distribution& prior,
                                               std::span<const Observation> xs) {
  const DistributionModel dm = distribution_model(model);
  MassFunction with_prior = infer(model, xs, prior);
  Distribution posterior = bayes_posterior(dm, prior, xs);
  const bool agree = matches_distribution(with_prior, posterior);
  BayesConsistencyReport report{std::move(with_prior), std::move(posterior), agree, {}, {}, {}};

  MassFunction unprimed = infer(model, xs);
  if (is_precise(unprimed)) {
    Distribution uniform = bayes_posterior(dm, Distribution::uniform(model.theta()), xs);
    report.uniform_agree = matches_distribution(unprimed, uniform);
    report.unprimed_result = std::move(unprimed);
    report.uniform_posterior = std::move(uniform);
  }
  return report;
}

}  // namespace gfm
