#pragma once

#include <span>

#include "gfm/hint.hpp"
#include "gfm/mass_function.hpp"
#include "gfm/rational.hpp"

namespace gfm {

/// Product weight discarded by Dempster conditioning.
struct ConflictReport {
  Rational conflict;

  /// 1 / (1 - conflict). Throws TotalConflict when conflict is 1.
  Rational renormalization() const;
};

struct Combination {
  MassFunction mass;
  ConflictReport report;
};

struct CombinedHint {
  Hint hint;
  ConflictReport report;
};

/// Dempster's rule on hints: the sample space becomes the pairs (o, o') whose
/// focal sets intersect, labelled "(o,o')", with the product probability
/// conditioned on that set. Throws TotalConflict when no pair survives.
CombinedHint combine_hints(const Hint& a, const Hint& b);

/// Dempster's rule on focal maps. Throws TotalConflict or FrameMismatch.
Combination combine_masses(const MassFunction& a, const MassFunction& b);

/// Left fold of combine_masses. The empty list yields the vacuous mass on
/// `theta`; the reported conflict is 1 - prod(1 - conflict_i).
Combination combine_all(const Frame& theta, std::span<const MassFunction> masses);

/// Same result as combine_all, computed as the renormalized pointwise product
/// of commonality tables followed by Moebius inversion. Costs O(|masses| *
/// |theta| * 2^|theta|) rational operations.
MassFunction combine_via_commonality(const Frame& theta, std::span<const MassFunction> masses);

}  // namespace gfm
