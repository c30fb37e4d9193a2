#include "gfm/combination.hpp"

#include "gfm/errors.hpp"

namespace gfm {

Rational ConflictReport::renormalization() const {
  const Rational kept = Rational(1) - conflict;
  if (kept.is_zero()) throw TotalConflict("total conflict: nothing left to renormalize");
  return Rational(1) / kept;
}

CombinedHint combine_hints(const Hint& a, const Hint& b) {
  require_same_frame(a.theta(), b.theta(), "hint combination");
  std::vector<HintOutcome> survivors;
  Rational kept;
  for (const auto& x : a.outcomes()) {
    for (const auto& y : b.outcomes()) {
      Subset focal = x.focal & y.focal;
      if (focal.empty()) continue;
      Rational w = x.probability * y.probability;
      kept += w;
      survivors.push_back({"(" + x.label + "," + y.label + ")", std::move(w), std::move(focal)});
    }
  }
  if (kept.is_zero()) throw TotalConflict("hints are totally conflicting");
  for (auto& s : survivors) s.probability /= kept;
  return {Hint(a.theta(), std::move(survivors)), {Rational(1) - kept}};
}

Combination combine_masses(const MassFunction& a, const MassFunction& b) {
  require_same_frame(a.frame(), b.frame(), "mass combination");
  MassFunction::FocalMap joint;
  Rational kept;
  for (const auto& [x, wx] : a.focal()) {
    for (const auto& [y, wy] : b.focal()) {
      const Mask c = x & y;
      if (c == 0) continue;
      Rational w = wx * wy;
      kept += w;
      joint[c] += w;
    }
  }
  if (kept.is_zero()) throw TotalConflict("mass functions are totally conflicting");
  for (auto& entry : joint) entry.second /= kept;
  return {MassFunction(a.frame(), std::move(joint)), {Rational(1) - kept}};
}

Combination combine_all(const Frame& theta, std::span<const MassFunction> masses) {
  if (masses.empty()) return {vacuous_mass(theta), {Rational()}};
  for (const auto& m : masses) require_same_frame(theta, m.frame(), "combination");
  MassFunction acc = masses.front();
  Rational kept_product(1);
  for (std::size_t i = 1; i < masses.size(); ++i) {
    auto step = combine_masses(acc, masses[i]);
    kept_product *= Rational(1) - step.report.conflict;
    acc = std::move(step.mass);
  }
  return {std::move(acc), {Rational(1) - kept_product}};
}

MassFunction combine_via_commonality(const Frame& theta, std::span<const MassFunction> masses) {
  if (masses.empty()) return vacuous_mass(theta);
  for (const auto& m : masses) require_same_frame(theta, m.frame(), "combination");
  if (masses.size() == 1) return masses.front();

  auto product = commonality_table(masses.front());
  for (std::size_t i = 1; i < masses.size(); ++i) {
    const auto q = commonality_table(masses[i]);
    for (std::size_t a = 0; a < product.size(); ++a) product[a] *= q[a];
  }
  // Invert the superset sums to get the unnormalized conjunctive masses.
  const std::size_t size = product.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t a = 0; a < size; ++a) {
      if ((a & bit) == 0) product[a] -= product[a | bit];
    }
  }
  const Rational kept = Rational(1) - product[0];
  if (kept.is_zero()) throw TotalConflict("mass functions are totally conflicting");
  MassFunction::FocalMap focal;
  for (std::size_t a = 1; a < size; ++a) {
    if (!product[a].is_zero()) focal.emplace(static_cast<Mask>(a), product[a] / kept);
  }
  return MassFunction(theta, std::move(focal));
}

}  // namespace gfm
