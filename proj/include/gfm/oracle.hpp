#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "gfm/functional_model.hpp"
#include "gfm/hint.hpp"
#include "gfm/mass_function.hpp"

namespace gfm {

inline constexpr std::size_t kJointOutcomeLimit = 1'000'000;

/// Hint over the full joint source space for n observations, conditioned once
/// on the joint outcomes whose gamma sets all intersect. Outcomes are labelled
/// "(o_1,...,o_n)".
///
/// Builds directly from the model table without going through the
/// per-observation hints or the combiner. Throws EnumerationLimit when
/// |omega|^n exceeds `limit` and TotalConflict when nothing survives.
Hint joint_hint(const FunctionalModel& model, std::span<const Observation> xs,
                std::size_t limit = kJointOutcomeLimit);

struct OracleReport {
  bool pass = false;
  std::optional<MassFunction> oracle;
  std::optional<MassFunction> incremental;
  std::string detail;
};

/// Compares the joint-enumeration mass with the incremental infer() result.
/// Both sides failing (no admissible outcome) counts as agreement.
OracleReport oracle_check(const FunctionalModel& model, std::span<const Observation> xs);

}  // namespace gfm
