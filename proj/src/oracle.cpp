#include "gfm/oracle.hpp"

#include <sstream>

#include "gfm/errors.hpp"

namespace gfm {

namespace {

struct Enumeration {
  const FunctionalModel& model;
  // compatible[i][o]: parameter values allowed by observation i and outcome o.
  std::vector<std::vector<Mask>> compatible;
  std::vector<std::size_t> tuple;
  std::vector<HintOutcome> survivors;

  void visit(std::size_t depth, const Rational& weight, Mask focal) {
    if (depth == compatible.size()) {
      std::string label = "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i != 0) label += ",";
        label += model.omega().label(tuple[i]);
      }
      label += ")";
      survivors.push_back({std::move(label), weight, model.theta().subset(focal)});
      return;
    }
    for (std::size_t o = 0; o < model.omega().size(); ++o) {
      const Rational& p = model.source()[o];
      if (p.is_zero()) continue;
      const Mask next = focal & compatible[depth][o];
      if (next == 0) continue;
      tuple[depth] = o;
      visit(depth + 1, weight * p, next);
    }
  }
};

std::string describe(const MassFunction& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, w] : m.focal_sets()) {
    os << (first ? "" : " ") << s.str() << ":" << w;
    first = false;
  }
  return os.str();
}

}  // namespace

Hint joint_hint(const FunctionalModel& model, std::span<const Observation> xs, std::size_t limit) {
  const std::size_t width = model.omega().size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (total > limit / width) {
      throw EnumerationLimit("joint source space exceeds " + std::to_string(limit) + " outcomes");
    }
    total *= width;
  }

  Enumeration e{model, {}, std::vector<std::size_t>(xs.size()), {}};
  for (const auto& x : xs) {
    const std::size_t xi = model.observations().index_of(x.label);
    std::vector<Mask> row(width, 0);
    for (std::size_t o = 0; o < width; ++o) {
      for (std::size_t t = 0; t < model.theta().size(); ++t) {
        if (model.outcome(t, o) == xi) row[o] |= Mask{1} << t;
      }
    }
    e.compatible.push_back(std::move(row));
  }
  e.visit(0, Rational(1), model.theta().full_mask());

  Rational kept;
  for (const auto& s : e.survivors) kept += s.probability;
  if (kept.is_zero()) throw TotalConflict("no joint source outcome explains the observations");
  for (auto& s : e.survivors) s.probability /= kept;
  return Hint(model.theta(), std::move(e.survivors));
}

OracleReport oracle_check(const FunctionalModel& model, std::span<const Observation> xs) {
  OracleReport report;
  std::string oracle_error;
  std::string incremental_error;
  try {
    report.oracle = mass_from_hint(joint_hint(model, xs));
  } catch (const TotalConflict& ex) {
    oracle_error = ex.what();
  }
  try {
    report.incremental = infer(model, xs);
  } catch (const TotalConflict& ex) {
    incremental_error = ex.what();
  } catch (const ImpossibleObservation& ex) {
    incremental_error = ex.what();
  }

  if (report.oracle && report.incremental) {
    report.pass = *report.oracle == *report.incremental;
    report.detail = "oracle: " + describe(*report.oracle) +
                    "; incremental: " + describe(*report.incremental);
  } else if (!report.oracle && !report.incremental) {
    report.pass = true;
    report.detail = "no admissible outcome on either side (" + incremental_error + ")";
  } else {
    report.pass = false;
    report.detail = report.oracle ? "incremental failed: " + incremental_error
                                  : "oracle failed: " + oracle_error;
  }
  return report;
}

}  // namespace gfm
