#include <gtest/gtest.h>

#include <map>

#include "generators.hpp"
#include "gfm/combination.hpp"
#include "gfm/errors.hpp"

using namespace gfm;

namespace {

Frame theta2() { return Frame({"t1", "t2"}, FrameRole::parameter); }

MassFunction heads_mass() {
  const Frame t = theta2();
  return MassFunction(t, {{0b10, Rational(1, 2)}, {0b11, Rational(1, 2)}});
}

Hint heads_hint() {
  const Frame t = theta2();
  return Hint(t, {{"o1", Rational(1, 2), t.full_set()}, {"o2", Rational(1, 2), t.singleton(1)}});
}

Hint tails_hint() {
  const Frame t = theta2();
  return Hint(t, {{"o2", Rational(1), t.singleton(0)}});
}

// Brute force over the dense power set: accumulate products of every pair of
// subsets, ignoring the sparse representation entirely.
MassFunction dense_dempster(const MassFunction& a, const MassFunction& b) {
  const Frame& t = a.frame();
  const std::size_t n = std::size_t{1} << t.size();
  std::vector<Rational> out(n);
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) {
      out[x & y] += a.weight(t.subset(static_cast<Mask>(x))) * b.weight(t.subset(static_cast<Mask>(y)));
    }
  }
  const Rational kept = Rational(1) - out[0];
  MassFunction::FocalMap focal;
  for (std::size_t c = 1; c < n; ++c) {
    if (!out[c].is_zero()) focal.emplace(static_cast<Mask>(c), out[c] / kept);
  }
  return MassFunction(t, std::move(focal));
}

}  // namespace

TEST(CombineHints, HeadsThenTailsIsDeterministic) {
  const CombinedHint c = combine_hints(heads_hint(), tails_hint());
  const MassFunction m = mass_from_hint(c.hint);
  EXPECT_TRUE(is_deterministic(m));
  EXPECT_EQ(m.weight(theta2().singleton(0)), Rational(1));
  EXPECT_EQ(c.report.conflict, Rational(1, 2));
  EXPECT_EQ(c.report.renormalization(), Rational(2));
  for (const auto& o : c.hint.outcomes()) {
    EXPECT_EQ(o.label, "(o1,o2)");
  }
}

TEST(CombineHints, VacuousIsIdentity) {
  const Frame t = theta2();
  const Hint vac(t, {{"all", Rational(1), t.full_set()}});
  EXPECT_EQ(mass_from_hint(combine_hints(heads_hint(), vac).hint), heads_mass());
  EXPECT_EQ(combine_hints(vac, heads_hint()).report.conflict, Rational(0));
}

TEST(CombineHints, TotalConflict) {
  const Frame t = theta2();
  const Hint on_t1(t, {{"a", Rational(1), t.singleton(0)}});
  const Hint on_t2(t, {{"b", Rational(1), t.singleton(1)}});
  EXPECT_THROW(combine_hints(on_t1, on_t2), TotalConflict);
}

TEST(CombineMasses, Examples) {
  const Frame t = theta2();
  const Combination twice = combine_masses(heads_mass(), heads_mass());
  EXPECT_EQ(twice.mass, MassFunction(t, {{0b10, Rational(3, 4)}, {0b11, Rational(1, 4)}}));
  EXPECT_EQ(twice.report.conflict, Rational(0));

  const Frame p({"-1", "+1"}, FrameRole::parameter);
  const MassFunction negative(p, {{0b01, Rational(9, 10)}, {0b10, Rational(1, 10)}});
  const MassFunction positive(p, {{0b10, Rational(9, 10)}, {0b01, Rational(1, 10)}});
  const Combination mixed = combine_masses(negative, positive);
  EXPECT_EQ(mixed.mass, MassFunction(p, {{0b01, Rational(1, 2)}, {0b10, Rational(1, 2)}}));
  EXPECT_EQ(mixed.report.conflict, Rational(41, 50));

  const Combination with_vacuous = combine_masses(vacuous_mass(t), heads_mass());
  EXPECT_EQ(with_vacuous.mass, heads_mass());
  EXPECT_EQ(with_vacuous.report.conflict, Rational(0));

  EXPECT_THROW(combine_masses(MassFunction(t, {{1, Rational(1)}}), MassFunction(t, {{2, Rational(1)}})),
               TotalConflict);
  EXPECT_THROW(combine_masses(heads_mass(), vacuous_mass(Frame({"a", "b"}, FrameRole::parameter))),
               FrameMismatch);
}

TEST(ConflictReport, RenormalizationFailsOnTotalConflict) {
  EXPECT_THROW(ConflictReport{Rational(1)}.renormalization(), TotalConflict);
  EXPECT_EQ(ConflictReport{Rational(41, 50)}.renormalization(), Rational(50, 9));
}

TEST(CombineAll, Examples) {
  const Frame t = theta2();
  const std::vector<MassFunction> three(3, heads_mass());
  const Combination c = combine_all(t, three);
  EXPECT_EQ(support(c.mass, t.singleton(1)), Rational(7, 8));
  EXPECT_EQ(plausibility(c.mass, t.singleton(0)), Rational(1, 8));

  const Combination none = combine_all(t, {});
  EXPECT_EQ(none.mass, vacuous_mass(t));
  EXPECT_EQ(none.report.conflict, Rational(0));

  // Red/blue coin reporter at p1 = p2 = 1/2: H and T hints each spread 1/3
  // over {t1}, {t2}, theta.
  const MassFunction third(t, {{0b01, Rational(1, 3)}, {0b10, Rational(1, 3)}, {0b11, Rational(1, 3)}});
  const std::vector<MassFunction> ht{third, third};
  const Combination mixed = combine_all(t, ht);
  EXPECT_EQ(mixed.mass.weight(t.singleton(0)), Rational(3, 7));
  EXPECT_EQ(mixed.mass.weight(t.singleton(1)), Rational(3, 7));
  EXPECT_EQ(mixed.mass.weight(t.full_set()), Rational(1, 7));
  EXPECT_EQ(mixed.report.conflict, Rational(2, 9));
}

TEST(CombineAll, AggregateConflictComposes) {
  const Frame t = theta2();
  const MassFunction tails(t, {{0b01, Rational(1)}});
  const std::vector<MassFunction> ms{heads_mass(), tails, heads_mass()};
  // heads x tails discards 1/2; then deterministic t1 x heads discards 1/2.
  EXPECT_EQ(combine_all(t, ms).report.conflict, Rational(3, 4));
}

TEST(CombineViaCommonality, Examples) {
  const Frame t = theta2();
  const std::vector<MassFunction> five(5, heads_mass());
  EXPECT_EQ(support(combine_via_commonality(t, five), t.singleton(1)), Rational(31, 32));
  const std::vector<MassFunction> one{heads_mass()};
  EXPECT_EQ(combine_via_commonality(t, one), heads_mass());
  EXPECT_EQ(combine_via_commonality(t, {}), vacuous_mass(t));
  const std::vector<MassFunction> conflicting{MassFunction(t, {{1, Rational(1)}}),
                                              MassFunction(t, {{2, Rational(1)}})};
  EXPECT_THROW(combine_via_commonality(t, conflicting), TotalConflict);
}

class CombinationProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{77};
};

TEST_F(CombinationProperties, MatchesDensePowerSetEnumeration) {
  std::uniform_int_distribution<std::size_t> size(1, 4);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Frame t = gen::numbered_frame(size(rng));
    const MassFunction a = gen::random_mass(rng, t);
    const MassFunction b = gen::random_mass(rng, t);
    try {
      const MassFunction combined = combine_masses(a, b).mass;
      EXPECT_EQ(combined, dense_dempster(a, b));
      ++checked;
    } catch (const TotalConflict&) {
      EXPECT_THROW(dense_dempster(a, b), ValidationError);
    }
  }
  EXPECT_GT(checked, 300);
}

TEST_F(CombinationProperties, CommutativeAndAssociative) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  int associative_cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Frame t = gen::numbered_frame(size(rng));
    const MassFunction a = gen::random_mass(rng, t);
    const MassFunction b = gen::random_mass(rng, t);
    const MassFunction c = gen::random_mass(rng, t);
    try {
      EXPECT_EQ(combine_masses(a, b).mass, combine_masses(b, a).mass);
      const MassFunction left = combine_masses(combine_masses(a, b).mass, c).mass;
      const MassFunction right = combine_masses(a, combine_masses(b, c).mass).mass;
      EXPECT_EQ(left, right);
      ++associative_cases;
    } catch (const TotalConflict&) {
    }
  }
  EXPECT_GT(associative_cases, 500);
}

TEST_F(CombinationProperties, VacuousIdentityAndDeterministicAbsorption) {
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const Frame t = gen::numbered_frame(size(rng));
    const MassFunction m = gen::random_mass(rng, t);
    EXPECT_EQ(combine_masses(vacuous_mass(t), m).mass, m);
    EXPECT_EQ(combine_masses(m, vacuous_mass(t)).mass, m);
    std::uniform_int_distribution<std::size_t> element(0, t.size() - 1);
    const Subset target = t.singleton(element(rng));
    const MassFunction det(t, {{target.bits(), Rational(1)}});
    if (plausibility(m, target).sign() > 0) {
      EXPECT_EQ(combine_masses(det, m).mass, det);
    } else {
      EXPECT_THROW(combine_masses(det, m), TotalConflict);
    }
  }
}

TEST_F(CombinationProperties, HintAndMassRoutesAgree) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const Frame t = gen::numbered_frame(size(rng));
    const MassFunction a = gen::random_mass(rng, t);
    const MassFunction b = gen::random_mass(rng, t);
    // Split every focal weight over two outcomes so the hints are not just
    // copies of the focal map.
    auto to_hint = [&](const MassFunction& m, const std::string& prefix) {
      std::vector<HintOutcome> out;
      int i = 0;
      for (const auto& [s, w] : m.focal_sets()) {
        out.push_back({prefix + std::to_string(i++), w * Rational(1, 4), s});
        out.push_back({prefix + std::to_string(i++), w * Rational(3, 4), s});
      }
      return Hint(t, std::move(out));
    };
    try {
      const Combination direct = combine_masses(a, b);
      const CombinedHint via_hints = combine_hints(to_hint(a, "a"), to_hint(b, "b"));
      EXPECT_EQ(mass_from_hint(via_hints.hint), direct.mass);
      EXPECT_EQ(via_hints.report.conflict, direct.report.conflict);
    } catch (const TotalConflict&) {
      EXPECT_THROW(combine_hints(to_hint(a, "a"), to_hint(b, "b")), TotalConflict);
    }
  }
}

TEST_F(CombinationProperties, CommonalityPathAgreesWithFold) {
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_int_distribution<int> count(1, 4);
  int agreed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Frame t = gen::numbered_frame(size(rng));
    std::vector<MassFunction> ms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) ms.push_back(gen::random_mass(rng, t, 3));
    try {
      const MassFunction folded = combine_all(t, ms).mass;
      EXPECT_EQ(combine_via_commonality(t, ms), folded);
      ++agreed;
    } catch (const TotalConflict&) {
      EXPECT_THROW(combine_via_commonality(t, ms), TotalConflict);
    }
  }
  EXPECT_GT(agreed, 500);
}

TEST_F(CombinationProperties, FoldIsOrderIndependent) {
  std::uniform_int_distribution<std::size_t> size(2, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const Frame t = gen::numbered_frame(size(rng));
    std::vector<MassFunction> ms;
    for (int i = 0; i < 4; ++i) ms.push_back(gen::random_mass(rng, t, 3));
    try {
      const Combination first = combine_all(t, ms);
      std::shuffle(ms.begin(), ms.end(), rng);
      const Combination second = combine_all(t, ms);
      EXPECT_EQ(first.mass, second.mass);
      EXPECT_EQ(first.report.conflict, second.report.conflict);
    } catch (const TotalConflict&) {
    }
  }
}

TEST_F(CombinationProperties, PriorMakesResultPrecise) {
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_int_distribution<long> weight(1, 9);
  for (int trial = 0; trial < 500; ++trial) {
    const Frame t = gen::numbered_frame(size(rng));
    std::vector<Rational> p;
    long total = 0;
    std::vector<long> ws;
    for (std::size_t i = 0; i < t.size(); ++i) ws.push_back(weight(rng));
    for (long w : ws) total += w;
    for (long w : ws) p.push_back(Rational(w, total));
    std::vector<MassFunction> ms{mass_from_hint(prior_hint(Distribution(t, p)))};
    for (int i = 0; i < 3; ++i) ms.push_back(gen::random_mass(rng, t));
    try {
      EXPECT_TRUE(is_precise(combine_all(t, ms).mass));
    } catch (const TotalConflict&) {
    }
  }
}

TEST_F(CombinationProperties, FoldedConflictEqualsOneShotConflict) {
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<int> count(2, 4);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Frame t = gen::numbered_frame(size(rng));
    std::vector<MassFunction> ms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) ms.push_back(gen::random_mass(rng, t));
    // Product mass of every tuple of focal sets whose intersection is empty.
    std::map<Mask, Rational> joint{{t.full_mask(), Rational(1)}};
    for (const auto& m : ms) {
      std::map<Mask, Rational> next;
      for (const auto& [a, wa] : joint) {
        for (const auto& [b, wb] : m.focal()) next[a & b] += wa * wb;
      }
      joint = std::move(next);
    }
    const Rational one_shot = joint.count(0) ? joint[0] : Rational(0);
    if (one_shot == Rational(1)) {
      EXPECT_THROW(combine_all(t, ms), TotalConflict);
      continue;
    }
    try {
      EXPECT_EQ(combine_all(t, ms).report.conflict, one_shot);
      ++checked;
    } catch (const TotalConflict&) {
      ADD_FAILURE() << "fold reported total conflict but one-shot conflict is " << one_shot;
    }
  }
  EXPECT_GT(checked, 100);
}
