#include <gtest/gtest.h>

#include <map>
#include <set>

#include "k3acm/classifier.hpp"
#include "reference.hpp"

using namespace k3acm;

namespace {

DivisorClass dc(const char* s) { return parse_divisor(s); }

std::map<DivisorClass, std::vector<Integer>> realized_map() {
  std::map<DivisorClass, std::vector<Integer>> out;
  for (const auto& v : full_classification())
    if (v.realized()) out[v.c1] = v.as_realized().c2_set;
  return out;
}

}  // namespace

TEST(TableA, MatchesReferenceRows) {
  const auto table = generate_table_a();
  std::set<std::tuple<DivisorClass, DivisorClass, bool>> got, want;
  for (const auto& r : table.rows) got.insert({r.c1, r.divisor, r.residual_effective});
  for (const auto& r : reference::kTableA) want.insert({dc(r.c1), dc(r.d), r.residual_effective});
  EXPECT_EQ(got, want);
  EXPECT_EQ(table.rows.size(), 37u);
  for (const auto& r : table.rows) EXPECT_EQ(r.residual, r.divisor - r.c1 + DivisorClass::h());
}

TEST(TableA, ExactlyTwoPublishedResidualDeviations) {
  const auto table = generate_table_a();
  ASSERT_EQ(table.warnings.size(), 2u);
  std::vector<std::pair<DivisorClass, DivisorClass>> flagged;
  for (const auto& r : table.rows)
    if (r.published_residual) {
      flagged.emplace_back(r.c1, r.divisor);
      EXPECT_EQ(is_effective(*r.published_residual), r.residual_effective);
    }
  EXPECT_EQ(flagged, (std::vector<std::pair<DivisorClass, DivisorClass>>{{dc("0"), dc("0")}, {dc("6h-2A"), dc("0")}}));
  for (const auto& r : table.rows)
    if (r.c1 == dc("6h-2A") && r.divisor.is_zero()) { EXPECT_EQ(r.residual, dc("2A-5h")); }
}

TEST(TableA, SpecificRows) {
  const auto table = generate_table_a();
  auto find = [&](const char* c1, const char* d) -> const TableARow* {
    for (const auto& r : table.rows)
      if (r.c1 == dc(c1) && r.divisor == dc(d)) return &r;
    return nullptr;
  };
  ASSERT_NE(find("4h-A", "3h-A"), nullptr);
  EXPECT_EQ(find("4h-A", "3h-A")->residual, DivisorClass::zero());
  EXPECT_TRUE(find("4h-A", "3h-A")->residual_effective);
  EXPECT_EQ(find("2h", "A"), nullptr);
  EXPECT_EQ(find("6h-2A", "A"), nullptr);
}

TEST(Divisorial, Examples) {
  auto r = eliminate_divisorial(dc("0"), dc("A"));
  EXPECT_TRUE(r.eliminated);
  EXPECT_EQ(r.rule, "R-split");

  r = eliminate_divisorial(dc("A"), dc("3h-A"));
  EXPECT_EQ(r.rule, "R-obstruct(0)");
  const auto& fact = std::get<LineCohomologyFact>(r.trace.back().facts.front());
  EXPECT_EQ(fact.divisor, dc("2A-3h"));
  EXPECT_EQ(fact.value.h1, 8);

  r = eliminate_divisorial(dc("2h+A"), dc("3h-A"));
  EXPECT_EQ(r.rule, "R-obstruct(-1)");
  EXPECT_EQ(std::get<LineCohomologyFact>(r.trace.back().facts.front()).value.h1, 6);

  EXPECT_FALSE(eliminate_divisorial(dc("2h"), dc("A")).eliminated);
  EXPECT_FALSE(eliminate_divisorial(dc("2h"), dc("3h-A")).eliminated);
  EXPECT_THROW(eliminate_divisorial(dc("2h"), dc("h")), DomainError);
  EXPECT_THROW(eliminate_divisorial(dc("A"), dc("A")), DomainError);  // c1 - D effective
}

TEST(Divisorial, SurvivorsAndReplay) {
  std::vector<std::pair<DivisorClass, DivisorClass>> survivors;
  for (const auto& [c1, d] : divisorial_pairs()) {
    const auto r = eliminate_divisorial(c1, d);
    EXPECT_TRUE(replay_trace(r.trace)) << c1 << " " << d;
    if (!r.eliminated) survivors.emplace_back(c1, d);
  }
  EXPECT_EQ(divisorial_pairs().size(), 14u);
  EXPECT_EQ(survivors, (std::vector<std::pair<DivisorClass, DivisorClass>>{{dc("2h"), dc("A")}, {dc("2h"), dc("3h-A")}}));
}

TEST(TableARows, EveryDivisorialRowEliminated) {
  std::size_t rows = 0;
  for (const auto& r : generate_table_a().rows) {
    if (r.divisor.is_zero()) continue;
    ++rows;
    const auto e = eliminate_table_a_row(r.c1, r.divisor);
    EXPECT_TRUE(e.eliminated) << r.c1 << " " << r.divisor;
    EXPECT_TRUE(replay_trace(e.trace)) << r.c1 << " " << r.divisor;
  }
  EXPECT_EQ(rows, 20u);
  EXPECT_EQ(eliminate_table_a_row(dc("A"), dc("A")).rule, "R-split");
  EXPECT_EQ(eliminate_table_a_row(dc("h+A"), dc("A")).rule, "R-dual-twist-reduction");
  EXPECT_EQ(eliminate_table_a_row(dc("3h"), dc("A")).rule, "R-section-count");
}

TEST(NonEffective, Examples) {
  auto r = eliminate_noneffective(dc("3A-2h"));
  EXPECT_EQ(r.rule, "R1");
  EXPECT_EQ(std::get<LineCohomologyFact>(r.trace.back().facts.front()).value.h1, 8);
  r = eliminate_noneffective(dc("2A-h"));
  EXPECT_EQ(r.rule, "R2");
  EXPECT_EQ(std::get<LineCohomologyFact>(r.trace.back().facts.front()).value.h1, 6);
  EXPECT_FALSE(eliminate_noneffective(dc("-h")).eliminated);
  EXPECT_FALSE(eliminate_noneffective(dc("2h-A")).eliminated);
  EXPECT_THROW(eliminate_noneffective(dc("h")), DomainError);
  EXPECT_EQ(noneffective_survivors(), (std::vector<DivisorClass>{dc("-h"), dc("A-h"), dc("2h-A")}));
}

TEST(Effective, Examples) {
  auto v = classify_effective(dc("3h"));
  ASSERT_TRUE(v.realized());
  EXPECT_EQ(v.as_realized().c2_set, std::vector<Integer>{14});
  EXPECT_TRUE(v.as_realized().ulrich);

  v = classify_effective(dc("h"));
  EXPECT_EQ(v.as_realized().c2_set, (std::vector<Integer>{3, 4, 5}));

  v = classify_effective(dc("2h+A"));
  ASSERT_FALSE(v.realized());
  EXPECT_EQ(v.as_eliminated().rule, "R-window");

  v = classify_effective(dc("A"));
  EXPECT_EQ(v.as_realized().c2_set, (std::vector<Integer>{3, 4}));
  EXPECT_NE(v.as_realized().zero_locus.find("not aG"), std::string::npos);

  v = classify_effective(dc("6h-2A"));
  EXPECT_EQ(v.as_eliminated().rule, "R-decompose");

  v = classify_effective(dc("2h"));
  EXPECT_EQ(v.as_realized().c2_set, std::vector<Integer>{8});
  EXPECT_EQ(v.as_realized().zero_locus_cases.size(), 3u);
  EXPECT_EQ(v.as_realized().splits.size(), 3u);
  EXPECT_EQ(v.as_realized().h0_values, std::vector<Integer>{4});

  EXPECT_THROW(classify_effective(dc("7h")), DomainError);
}

TEST(Classification, MainTheorem) {
  const auto want = reference::main_theorem();
  EXPECT_EQ(realized_map(), want);
  for (const auto& v : full_classification())
    if (v.realized()) { EXPECT_EQ(v.as_realized().ulrich, v.c1 == dc("3h")) << v.c1; }
}

TEST(ClassificationProperty, TotalAndReplayable) {
  const auto all = full_classification();
  EXPECT_EQ(all.size(), 24u);
  std::set<DivisorClass> seen;
  for (const auto& v : all) {
    EXPECT_TRUE(seen.insert(v.c1).second) << v.c1;
    EXPECT_FALSE(v.trace().empty()) << v.c1;
    EXPECT_TRUE(replay_trace(v.trace())) << v.c1;
    if (v.realized()) { EXPECT_FALSE(v.as_realized().existence_citations.empty()) << v.c1; }
  }
  for (const auto& c1 : enumerate_c1_effective().classes) EXPECT_TRUE(seen.count(c1));
  for (const auto& c1 : enumerate_c1_noneffective().classes) EXPECT_TRUE(seen.count(c1));
}

TEST(ClassificationProperty, WindowAndSectionBound) {
  for (const auto& v : full_classification()) {
    if (!v.realized()) continue;
    const auto& r = v.as_realized();
    ASSERT_EQ(r.h0_values.size(), r.c2_set.size());
    for (std::size_t i = 0; i < r.c2_set.size(); ++i) {
      const auto& c2 = r.c2_set[i];
      const Integer chi = chi_rank2({v.c1, c2});
      EXPECT_GE(r.h0_values[i], 1) << v.c1;
      EXPECT_LE(r.h0_values[i], 8) << v.c1;
      EXPECT_LE(r.h0_values[i], chi) << v.c1;
      if (v.branch == CandidateBranch::noneffective) {
        // h^0(E) = 1: the section vanishes at one point and c1 has no sections.
        EXPECT_EQ(r.h0_values[i], 1) << v.c1;
        continue;
      }
      const Integer half = square(v.c1) / 2;
      if (v.c1.is_zero() || v.c1 == DivisorClass::h()) {
        // h^2 = 1 only for c1 = 0.
        EXPECT_EQ(chi - r.h0_values[i], v.c1.is_zero() ? 1 : 0);
        continue;
      }
      EXPECT_EQ(chi, r.h0_values[i]) << v.c1;  // h^2 = 0
      EXPECT_GE(c2, half - 4) << v.c1;
      EXPECT_LE(c2, 8 + half - degree(v.c1)) << v.c1;
    }
  }
}

TEST(ClassificationProperty, OddSecondClassCarriesParityTag) {
  for (const auto& v : full_classification()) {
    if (!v.realized()) continue;
    const auto& r = v.as_realized();
    const bool odd = std::any_of(r.c2_set.begin(), r.c2_set.end(), [](const Integer& c) { return !is_even(c); });
    const bool tagged = std::find(r.tags.begin(), r.tags.end(), kIndecomposableByParity) != r.tags.end();
    EXPECT_EQ(odd, tagged) << v.c1;
  }
  // U.V is even for every pair of classes, so a split bundle never has odd c2.
  for (int x = -6; x <= 6; ++x)
    for (int y = -6; y <= 6; ++y)
      for (int u = -6; u <= 6; ++u)
        for (int w = -6; w <= 6; ++w) EXPECT_TRUE(is_even(intersect(DivisorClass{x, y}, DivisorClass{u, w})));
}

TEST(Ulrich, BoundCheck) {
  auto c = ulrich_bound_check({dc("3h"), 14});
  EXPECT_EQ(c.h0, 8);
  EXPECT_TRUE(c.ulrich);
  c = ulrich_bound_check({dc("0"), 2}, 1);
  EXPECT_EQ(c.chi, 2);
  EXPECT_FALSE(c.ulrich);
  c = ulrich_bound_check({dc("2h"), 8});
  EXPECT_EQ(c.h0, 4);
  EXPECT_FALSE(c.ulrich);
  EXPECT_FALSE(ulrich_bound_check({dc("3h"), 10}).within_bound);
}

TEST(Replay, EmptyAndTampered) {
  EXPECT_TRUE(replay_trace({}));
  auto trace = eliminate_divisorial(dc("A"), dc("3h-A")).trace;
  ASSERT_TRUE(replay_trace(trace));
  auto& fact = std::get<LineCohomologyFact>(trace.back().facts.front());
  ASSERT_EQ(fact.value.h1, 8);
  fact.value.h1 = 7;
  EXPECT_FALSE(replay_trace(trace));
  const auto mismatches = replay_mismatches(trace);
  ASSERT_EQ(mismatches.size(), 1u);
  EXPECT_EQ(mismatches[0].step, trace.size() - 1);
}

TEST(Replay, EveryFactKindCanBeTampered) {
  Trace trace{{"r", "s",
               {chi_line_fact(dc("A")), intersection_fact(dc("A"), dc("h")), effectivity_fact(dc("2h-A")),
                twist_fact({dc("A"), 3}, dc("h"), Dualize::yes), macaulay_fact(4, 1), plane_count_fact(1),
                chi_rank2_fact({dc("3h"), 14})},
               "c"}};
  ASSERT_TRUE(replay_trace(trace));
  for (std::size_t i = 0; i < trace[0].facts.size(); ++i) {
    Trace t = trace;
    std::visit(
        [](auto& f) {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, EffectivityFact>)
            f.value = Effectivity::effective;
          else if constexpr (std::is_same_v<F, TwistFact>)
            f.value.c2 += 1;
          else if constexpr (std::is_same_v<F, MacaulayFact> || std::is_same_v<F, ChiLineFact> ||
                             std::is_same_v<F, ChiRank2Fact> || std::is_same_v<F, IntersectionFact>)
            f.value += 1;
          else if constexpr (std::is_same_v<F, PlaneCountFact>)
            f.max_planes += 1;
          else
            f.value.h0 += 1;
        },
        t[0].facts[i]);
    EXPECT_FALSE(replay_trace(t)) << i;
  }
}
