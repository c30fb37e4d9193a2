#include "gfm/mass_function.hpp"

#include "gfm/errors.hpp"

namespace gfm {

MassFunction::MassFunction(Frame frame, FocalMap focal)
    : frame_(std::move(frame)), focal_(std::move(focal)) {
  Rational total;
  for (const auto& [bits, w] : focal_) {
    if (bits == 0) throw ValidationError("mass function assigns weight to the empty set");
    if ((bits & ~frame_.full_mask()) != 0) {
      throw ValidationError("focal set has members outside the frame");
    }
    if (w.sign() <= 0) throw ValidationError("focal weights must be positive");
    total += w;
  }
  if (total != Rational(1)) {
    throw ValidationError("focal weights sum to " + total.str() + ", not 1");
  }
}

MassFunction MassFunction::from_focal_sets(
    const Frame& frame, const std::vector<std::pair<Subset, Rational>>& entries) {
  FocalMap focal;
  for (const auto& [s, w] : entries) {
    require_same_frame(frame, s.frame(), "mass function construction");
    focal[s.bits()] += w;
  }
  return MassFunction(frame, std::move(focal));
}

std::vector<std::pair<Subset, Rational>> MassFunction::focal_sets() const {
  std::vector<std::pair<Subset, Rational>> out;
  out.reserve(focal_.size());
  for (const auto& [bits, w] : focal_) out.emplace_back(Subset(frame_, bits), w);
  return out;
}

Rational MassFunction::weight(const Subset& subset) const {
  require_same_frame(frame_, subset.frame(), "mass lookup");
  const auto it = focal_.find(subset.bits());
  return it == focal_.end() ? Rational() : it->second;
}

Rational support(const MassFunction& m, const Subset& hypothesis) {
  require_same_frame(m.frame(), hypothesis.frame(), "support");
  const Mask h = hypothesis.bits();
  Rational total;
  for (const auto& [bits, w] : m.focal()) {
    if ((bits & ~h) == 0) total += w;
  }
  return total;
}

Rational plausibility(const MassFunction& m, const Subset& hypothesis) {
  require_same_frame(m.frame(), hypothesis.frame(), "plausibility");
  const Mask h = hypothesis.bits();
  Rational total;
  for (const auto& [bits, w] : m.focal()) {
    if ((bits & h) != 0) total += w;
  }
  return total;
}

Rational commonality(const MassFunction& m, const Subset& hypothesis) {
  require_same_frame(m.frame(), hypothesis.frame(), "commonality");
  if (hypothesis.empty()) throw ValidationError("commonality of the empty set is not defined");
  const Mask h = hypothesis.bits();
  Rational total;
  for (const auto& [bits, w] : m.focal()) {
    if ((h & ~bits) == 0) total += w;
  }
  return total;
}

namespace {

std::vector<Rational> dense(const MassFunction& m) {
  std::vector<Rational> table(std::size_t{1} << m.frame().size());
  for (const auto& [bits, w] : m.focal()) table[bits] = w;
  return table;
}

}  // namespace

std::vector<Rational> belief_table(const MassFunction& m) {
  auto table = dense(m);
  for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
    for (std::size_t a = 0; a < table.size(); ++a) {
      if ((a & bit) != 0) table[a] += table[a ^ bit];
    }
  }
  return table;
}

std::vector<Rational> commonality_table(const MassFunction& m) {
  auto table = dense(m);
  for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
    for (std::size_t a = 0; a < table.size(); ++a) {
      if ((a & bit) == 0) table[a] += table[a | bit];
    }
  }
  return table;
}

MassFunction mass_from_belief(const Frame& frame, std::span<const Rational> belief) {
  const std::size_t size = std::size_t{1} << frame.size();
  if (belief.size() != size) {
    throw InvalidBelief("belief table has " + std::to_string(belief.size()) +
                        " entries; the power set has " + std::to_string(size));
  }
  std::vector<Rational> table(belief.begin(), belief.end());
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t a = 0; a < size; ++a) {
      if ((a & bit) != 0) table[a] -= table[a ^ bit];
    }
  }
  if (!table[0].is_zero()) throw InvalidBelief("belief of the empty set is " + table[0].str());
  MassFunction::FocalMap focal;
  Rational total;
  for (std::size_t a = 1; a < size; ++a) {
    const Rational& w = table[a];
    if (w.sign() < 0) {
      throw InvalidBelief("recovered mass of " + frame.subset(static_cast<Mask>(a)).str() +
                          " is " + w.str() + " < 0");
    }
    if (w.sign() > 0) focal.emplace(static_cast<Mask>(a), w);
    total += w;
  }
  if (total != Rational(1)) throw InvalidBelief("recovered masses sum to " + total.str());
  return MassFunction(frame, std::move(focal));
}

bool is_deterministic(const MassFunction& m) {
  return m.focal().size() == 1 && std::popcount(m.focal().begin()->first) == 1;
}

bool is_precise(const MassFunction& m) {
  for (const auto& entry : m.focal()) {
    if (std::popcount(entry.first) != 1) return false;
  }
  return true;
}

bool equivalent(const MassFunction& a, const MassFunction& b) {
  require_same_frame(a.frame(), b.frame(), "equivalence");
  return a.focal() == b.focal();
}

MassFunction vacuous_mass(const Frame& frame) {
  if (frame.role() != FrameRole::parameter) {
    throw ValidationError("vacuous mass requires a parameter frame");
  }
  return MassFunction(frame, {{frame.full_mask(), Rational(1)}});
}

}  // namespace gfm
