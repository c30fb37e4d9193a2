#pragma once

#include <string>
#include <vector>

#include "gfm/distribution.hpp"
#include "gfm/frame.hpp"
#include "gfm/mass_function.hpp"
#include "gfm/rational.hpp"

namespace gfm {

/// One element of a hint's sample space: its probability and the non-empty
/// set of parameter values it forces.
struct HintOutcome {
  std::string label;
  Rational probability;
  Subset focal;
};

/// A finite probability space together with a multivalued mapping into the
/// non-empty subsets of the parameter frame.
///
/// The sample space is a plain list of labelled outcomes rather than a Frame,
/// since joint and product sample spaces grow far beyond Frame::kMaxSize.
class Hint {
 public:
  /// Drops zero-probability outcomes. Throws ValidationError when a focal set
  /// is empty or over another frame, a probability is negative, labels repeat,
  /// or the probabilities do not add up to one.
  Hint(Frame theta, std::vector<HintOutcome> outcomes);

  const Frame& theta() const { return theta_; }
  const std::vector<HintOutcome>& outcomes() const { return outcomes_; }
  std::size_t size() const { return outcomes_.size(); }

 private:
  Frame theta_;
  std::vector<HintOutcome> outcomes_;
};

/// Merges outcomes that share a focal set.
MassFunction mass_from_hint(const Hint& hint);

/// Every outcome maps to a singleton.
bool is_precise(const Hint& hint);

/// The precise hint of a prior: sample space = parameter frame, each element
/// forcing itself. Throws ValidationError unless the frame has the parameter
/// role.
Hint prior_hint(const Distribution& prior);

}  // namespace gfm
