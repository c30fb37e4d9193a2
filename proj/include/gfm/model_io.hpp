#pragma once

#include <string>
#include <string_view>

#include "gfm/errors.hpp"
#include "gfm/functional_model.hpp"

namespace gfm {

// Model files are YAML documents:
//
//   theta: ["t1", "t2"]
//   x: ["H", "T"]
//   omega:                       # flat form ...
//     - {label: "o1", p: "1/2"}
//     - {label: "o2", p: "0.5"}
//   f:
//     - {t: "t1", o: "o1", x: "H"}
//     ...
//
// omega may instead be a product of independent factors, expanded into the
// flat product space with labels concatenated in factor order:
//
//   omega:
//     factors:
//       - {labels: ["o1", "o2"], probabilities: ["3/10", "7/10"]}
//       - {labels: ["o1'", "o2'"], probabilities: ["1/2", "1/2"]}
//
// Probabilities are exact: "a/b" or decimal literals.

enum class ModelErrorCode {
  syntax,
  missing_field,
  unexpected_field,
  invalid_label,
  duplicate_label,
  frame_too_large,
  bad_probability,
  sum_violation,
  unknown_label,
  incomplete_function,
  duplicate_function_entry,
};

std::string_view to_string(ModelErrorCode code);

class ModelError : public ValidationError {
 public:
  ModelError(ModelErrorCode code, const std::string& message, int line = 0, int column = 0);

  ModelErrorCode code() const { return code_; }
  // 1-based; 0 when unknown.
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ModelErrorCode code_;
  int line_;
  int column_;
};

/// Throws ModelError.
FunctionalModel parse_model(std::string_view text);

/// Canonical, byte-deterministic rendering with a flat omega section.
std::string serialize_model(const FunctionalModel& model);

}  // namespace gfm
