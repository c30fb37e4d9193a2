#pragma once

#include <string_view>
#include <vector>

#include "gfm/frame.hpp"
#include "gfm/rational.hpp"

namespace gfm {

/// A probability distribution on the elements of a frame.
class Distribution {
 public:
  /// One probability per frame element, in frame order. Throws ValidationError
  /// on a length mismatch, a negative entry, or a total different from 1.
  Distribution(Frame frame, std::vector<Rational> probabilities);

  static Distribution uniform(const Frame& frame);
  /// Point mass on one element.
  static Distribution degenerate(const Frame& frame, std::size_t index);

  const Frame& frame() const { return frame_; }
  const std::vector<Rational>& probabilities() const { return probabilities_; }
  const Rational& operator[](std::size_t index) const { return probabilities_.at(index); }
  const Rational& probability(std::string_view label) const;

  Rational measure(const Subset& subset) const;

  friend bool operator==(const Distribution& a, const Distribution& b) = default;

 private:
  Frame frame_;
  std::vector<Rational> probabilities_;
};

}  // namespace gfm
