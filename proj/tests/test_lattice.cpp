#include <gtest/gtest.h>

#include "k3acm/lattice.hpp"
#include "oracles.hpp"

using namespace k3acm;

constexpr int kPropertyBox = 50;

TEST(Lattice, IntersectionSpotValues) {
  const auto h = DivisorClass::h(), a = DivisorClass::A();
  EXPECT_EQ(intersect(h, h), 4);
  EXPECT_EQ(intersect(h, a), 6);
  EXPECT_EQ(intersect(a, a), 4);
  EXPECT_EQ(intersect(DivisorClass{3, -1}, a), 14);
  EXPECT_EQ(square(DivisorClass{2, -1}), -4);
  EXPECT_EQ(square(DivisorClass{2, -2}), -16);
  EXPECT_EQ(square(DivisorClass{3, -2}), -20);
  EXPECT_EQ(square(DivisorClass{-2, 3}), -20);
  EXPECT_EQ(degree(DivisorClass{2, 1}), 14);
}

TEST(Lattice, MatchesHandExpansion) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    int x1 = c(rng), y1 = c(rng), x2 = c(rng), y2 = c(rng);
    EXPECT_EQ(intersect(DivisorClass{x1, y1}, DivisorClass{x2, y2}), oracle::dot(x1, y1, x2, y2));
  }
}

TEST(Lattice, ChiLine) {
  EXPECT_EQ(chi_line(DivisorClass::A()), 4);
  EXPECT_EQ(chi_line(DivisorClass::zero()), 2);
  EXPECT_EQ(chi_line(DivisorClass{2, -3}), 2 + (-20) / 2);
}

TEST(Lattice, BigCoefficientsStayExact) {
  const Integer big("123456789012345678901234567890");
  const DivisorClass d{big, -big};
  // (xh - xA)^2 = 4x^2 - 12x^2 + 4x^2
  EXPECT_EQ(square(d), Integer(-4) * big * big);
  EXPECT_FALSE(fits_int64(square(d)));
}

TEST(Lattice, ParseAndPrint) {
  EXPECT_EQ(parse_divisor("3,-1"), (DivisorClass{3, -1}));
  EXPECT_EQ(parse_divisor("3h-A"), (DivisorClass{3, -1}));
  EXPECT_EQ(parse_divisor(" -2h + 3A "), (DivisorClass{-2, 3}));
  EXPECT_EQ(parse_divisor("A"), DivisorClass::A());
  EXPECT_EQ(parse_divisor("0"), DivisorClass::zero());
  EXPECT_EQ(to_string(DivisorClass{3, -1}), "3h-A");
  EXPECT_EQ(to_string(DivisorClass{-1, 0}), "-h");
  EXPECT_EQ(to_string(DivisorClass{0, 2}), "2A");
  EXPECT_EQ(to_string(DivisorClass{0, 0}), "0");
  for (const char* bad : {"", "3,", "h h", "3x", "1,2,3", "hA"}) EXPECT_THROW(parse_divisor(bad), UsageError) << bad;
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) EXPECT_EQ(parse_divisor(to_string(DivisorClass{x, y})), (DivisorClass{x, y}));
}

TEST(Lattice, GramValidation) {
  EXPECT_NO_THROW(GramLattice(4, 6, 4));
  EXPECT_NO_THROW(GramLattice(2, 3, 2));
  try {
    GramLattice(3, 6, 4);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.name(), "invalid-lattice");
  }
  EXPECT_THROW(GramLattice(4, 2, 4), DomainError);  // determinant 12 > 0
  EXPECT_TRUE(GramLattice::standard().is_default());
  EXPECT_EQ(GramLattice::standard().determinant(), -20);
}

TEST(Lattice, TwistRank2) {
  const auto h = DivisorClass::h();
  // E^v(h) for (A, 2): c1 = 2h - A, c2 = 2 - A.h + h^2.
  EXPECT_EQ(twist_rank2({DivisorClass::A(), 2}, h, Dualize::yes), (Rank2Invariants{{2, -1}, 0}));
  // E(-h) for (2h, 8): (0, 8 - 8 + 4).
  EXPECT_EQ(twist_rank2({{2, 0}, 8}, -h, Dualize::no), (Rank2Invariants{{0, 0}, 4}));
  EXPECT_EQ(chi_rank2({{3, 0}, 14}), 8);
  EXPECT_EQ(chi_rank2({{0, 0}, 2}), 2);
}

// Riemann-Roch gives chi(E(T)) = chi(E) + c1.T + T^2.
TEST(LatticeProperty, TwistRiemannRoch) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int i = 0; i < 2000; ++i) {
    Rank2Invariants inv{{c(rng), c(rng)}, c(rng)};
    DivisorClass t{c(rng), c(rng)};
    EXPECT_EQ(chi_rank2(twist_rank2(inv, t, Dualize::no)), chi_rank2(inv) + intersect(inv.c1, t) + square(t));
    // Dualizing twice returns the original.
    auto back = twist_rank2(twist_rank2(inv, t, Dualize::yes), t, Dualize::yes);
    EXPECT_EQ(back, inv);
  }
}

TEST(LatticeProperty, SquareParityAndNonVanishing) {
  for (int x = -kPropertyBox; x <= kPropertyBox; ++x)
    for (int y = -kPropertyBox; y <= kPropertyBox; ++y) {
      const DivisorClass d{x, y};
      const auto report = parity_class(d);
      EXPECT_EQ(report.square, oracle::square(x, y));
      if (x % 2 == 0 && y % 2 == 0)
        EXPECT_EQ(oracle::square(x, y) % 16, 0);
      else
        EXPECT_EQ(((oracle::square(x, y) % 8) + 8) % 8, 4);
      if (!d.is_zero()) { EXPECT_NE(report.square, 0) << d; }
      EXPECT_EQ(mod_floor(chi_line(d), 2), 0) << d;
    }
}

TEST(Lattice, ParityNeedsDefaultLattice) {
  EXPECT_THROW(parity_class(DivisorClass::h(), GramLattice(2, 3, 2)), DomainError);
}
