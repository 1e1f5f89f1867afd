#include <gtest/gtest.h>

#include "k3acm/candidates.hpp"
#include "oracles.hpp"

using namespace k3acm;

TEST(Divisor, EffectivitySpotValues) {
  EXPECT_EQ(effectivity(DivisorClass::zero()).kind, Effectivity::zero);
  EXPECT_EQ(effectivity(DivisorClass::A()).kind, Effectivity::effective);
  EXPECT_EQ(effectivity(DivisorClass{3, -1}).kind, Effectivity::effective);
  EXPECT_EQ(effectivity(DivisorClass{-1, 0}).kind, Effectivity::anti_effective);
  EXPECT_EQ(effectivity(DivisorClass{2, -1}).kind, Effectivity::neither);  // square -4
  EXPECT_EQ(effectivity(DivisorClass{-2, 3}).kind, Effectivity::neither);  // square -20
  EXPECT_TRUE(effectivity(DivisorClass::zero()).is_effective());
  EXPECT_FALSE(effectivity(DivisorClass{1, -1}).is_effective());
}

TEST(Divisor, EffectivityRefusesOtherLattices) {
  try {
    effectivity(DivisorClass::h(), GramLattice(2, 3, 2));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.name(), "unsupported-lattice");
    EXPECT_NE(std::string(e.what()).find("general determinantal quartic"), std::string::npos);
  }
}

TEST(Divisor, InitializedLines) {
  EXPECT_TRUE(is_initialized_line(DivisorClass::zero()));
  EXPECT_TRUE(is_initialized_line(DivisorClass::A()));
  EXPECT_TRUE(is_initialized_line(DivisorClass{3, -1}));
  EXPECT_FALSE(is_initialized_line(DivisorClass::h()));
  EXPECT_FALSE(is_initialized_line(DivisorClass{2, -1}));
}

TEST(Divisor, CurveInvariants) {
  // A sextic of genus 3 with 4 sections.
  EXPECT_EQ(curve_invariants(DivisorClass::A()), (CurveInvariants{6, 3, 4}));
  EXPECT_EQ(curve_invariants(DivisorClass::h()), (CurveInvariants{4, 3, 4}));
  EXPECT_EQ(curve_invariants(DivisorClass{3, 0}), (CurveInvariants{12, 19, 20}));
  EXPECT_THROW(curve_invariants(DivisorClass::zero()), DomainError);
  EXPECT_THROW(curve_invariants(DivisorClass{2, -1}), DomainError);
}

TEST(DivisorProperty, EffectiveIffGloballyGenerated) {
  for (int x = -50; x <= 50; ++x)
    for (int y = -50; y <= 50; ++y) {
      const DivisorClass d{x, y};
      EXPECT_EQ(is_effective(d), is_globally_generated(d)) << d;
      EXPECT_EQ(is_effective(d), oracle::effective(x, y)) << d;
      // Never both D and -D effective unless D = 0.
      if (!d.is_zero()) { EXPECT_FALSE(is_effective(d) && is_effective(-d)) << d; }
    }
}

TEST(DivisorProperty, EffectiveConeIsClosedUnderAddition) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-30, 30);
  int checked = 0;
  while (checked < 2000) {
    DivisorClass a{c(rng), c(rng)}, b{c(rng), c(rng)};
    if (!is_effective(a) || !is_effective(b)) continue;
    EXPECT_TRUE(is_effective(a + b)) << a << " + " << b;
    ++checked;
  }
}

TEST(Candidates, AcmLinesMatchTheQuadraticSystem) {
  const auto lines = enumerate_initialized_acm_lines();
  std::vector<DivisorClass> expected{DivisorClass::zero()};
  for (auto [x, y] : oracle::acm_system_solutions(40)) expected.push_back({x, y});
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(lines.classes, expected);
  EXPECT_EQ(lines.classes, (std::vector<DivisorClass>{{0, 0}, {0, 1}, {3, -1}}));
}

TEST(Candidates, Lists) {
  const std::vector<DivisorClass> effective = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0},  {2, 1},  {3, -1}, {3, 0},
                                               {3, 1}, {4, -1}, {4, 0}, {5, -1}, {5, 0}, {6, -2}, {6, -1}, {6, 0}};
  const std::vector<DivisorClass> noneffective = {{-2, 3}, {-1, 0}, {-1, 1}, {-1, 2}, {2, -1}, {5, -2}, {7, -3}};
  EXPECT_EQ(enumerate_c1_effective().classes, effective);
  EXPECT_EQ(enumerate_c1_noneffective().classes, noneffective);
}

TEST(CandidatesProperty, StableAcrossBoxes) {
  for (int box : {16, 32, 64}) {
    EXPECT_EQ(enumerate_c1_effective(box).classes, enumerate_c1_effective(16).classes) << box;
    EXPECT_EQ(enumerate_c1_noneffective(box).classes, enumerate_c1_noneffective(16).classes) << box;
    EXPECT_EQ(enumerate_initialized_acm_lines(box).classes, enumerate_initialized_acm_lines(8).classes) << box;
  }
}

TEST(Candidates, BoxErrors) {
  try {
    enumerate_c1_effective(8);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.name(), "box-too-small");
  }
  // The boundary check fires when a predicate reaches the shell.
  try {
    detail::scan_box(3, 1, CandidateBranch::effective, [](const DivisorClass& d) { return d.x == 3; });
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.name(), "boundary-hit");
  }
}
