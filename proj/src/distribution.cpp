#include "gfm/distribution.hpp"

#include "gfm/errors.hpp"

namespace gfm {

Distribution::Distribution(Frame frame, std::vector<Rational> probabilities)
    : frame_(std::move(frame)), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != frame_.size()) {
    throw ValidationError("distribution has " + std::to_string(probabilities_.size()) +
                          " entries for a frame of " + std::to_string(frame_.size()));
  }
  Rational total;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    if (probabilities_[i].sign() < 0) {
      throw ValidationError("negative probability for '" + frame_.label(i) + "'");
    }
    total += probabilities_[i];
  }
  if (total != Rational(1)) {
    throw ValidationError("probabilities sum to " + total.str() + ", not 1");
  }
}

Distribution Distribution::uniform(const Frame& frame) {
  const auto n = static_cast<long>(frame.size());
  return Distribution(frame, std::vector<Rational>(frame.size(), Rational(1, n)));
}

Distribution Distribution::degenerate(const Frame& frame, std::size_t index) {
  std::vector<Rational> p(frame.size());
  p.at(index) = 1;
  return Distribution(frame, std::move(p));
}

const Rational& Distribution::probability(std::string_view label) const {
  return probabilities_[frame_.index_of(label)];
}

Rational Distribution::measure(const Subset& subset) const {
  require_same_frame(frame_, subset.frame(), "distribution measure");
  Rational total;
  for (std::size_t i : subset.indices()) total += probabilities_[i];
  return total;
}

}  // namespace gfm
