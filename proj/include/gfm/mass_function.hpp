#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gfm/frame.hpp"
#include "gfm/rational.hpp"

namespace gfm {

/// Basic probability assignment stored sparsely by focal set.
///
/// Every stored focal set is non-empty, every weight is strictly positive and
/// the weights add up to exactly one.
class MassFunction {
 public:
  using FocalMap = std::map<Mask, Rational>;

  /// Throws ValidationError if any invariant is violated. Zero weights are
  /// rejected rather than dropped so that callers notice malformed input.
  MassFunction(Frame frame, FocalMap focal);

  /// Accumulates repeated focal sets before validating.
  static MassFunction from_focal_sets(const Frame& frame,
                                      const std::vector<std::pair<Subset, Rational>>& entries);

  const Frame& frame() const { return frame_; }
  const FocalMap& focal() const { return focal_; }
  std::vector<std::pair<Subset, Rational>> focal_sets() const;

  /// m(A); zero when A is not focal.
  Rational weight(const Subset& subset) const;

  friend bool operator==(const MassFunction& a, const MassFunction& b) = default;

 private:
  Frame frame_;
  FocalMap focal_;
};

/// sp(H): total mass of focal sets contained in H.
Rational support(const MassFunction& m, const Subset& hypothesis);
/// pl(H): total mass of focal sets meeting H.
Rational plausibility(const MassFunction& m, const Subset& hypothesis);
/// Q(H): total mass of focal sets containing H. H must be non-empty.
Rational commonality(const MassFunction& m, const Subset& hypothesis);

/// Support of every subset, indexed by mask (2^|frame| entries).
std::vector<Rational> belief_table(const MassFunction& m);
/// Commonality of every subset, indexed by mask; entry 0 is Q(empty) = 1.
std::vector<Rational> commonality_table(const MassFunction& m);

/// Moebius inversion of a dense belief table indexed by mask. Throws
/// InvalidBelief when the table has the wrong size or does not come from a
/// normalized mass function.
MassFunction mass_from_belief(const Frame& frame, std::span<const Rational> belief);

/// Exactly one focal set and it is a singleton.
bool is_deterministic(const MassFunction& m);
/// Every focal set is a singleton, so support is an additive measure.
bool is_precise(const MassFunction& m);
/// Same support function. Throws FrameMismatch across frames.
bool equivalent(const MassFunction& a, const MassFunction& b);

/// m(frame) = 1. The frame must have the parameter role.
MassFunction vacuous_mass(const Frame& frame);

}  // namespace gfm
