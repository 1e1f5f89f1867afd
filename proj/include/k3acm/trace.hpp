#pragma once

#include <string>
#include <variant>
#include <vector>

#include "k3acm/cohomology.hpp"
#include "k3acm/hilbert.hpp"

namespace k3acm {

// Numeric facts a deduction step relies on. Each one can be recomputed from
// scratch, which is what replay does.

struct LineCohomologyFact {
  DivisorClass divisor;
  CohomologyTriple value;
};

struct ChiLineFact {
  DivisorClass divisor;
  Integer value;
};

struct ChiRank2Fact {
  Rank2Invariants invariants;
  Integer value;
};

struct IntersectionFact {
  DivisorClass lhs;
  DivisorClass rhs;
  Integer value;
};

struct EffectivityFact {
  DivisorClass divisor;
  Effectivity value;
};

struct TwistFact {
  Rank2Invariants input;
  DivisorClass twist;
  Dualize dualize;
  Rank2Invariants value;
};

struct MacaulayFact {
  Integer value;
  unsigned degree;
  Integer bound;
};

struct PlaneCountFact {
  Integer scheme_degree;
  Integer max_planes;
};

using Fact = std::variant<LineCohomologyFact, ChiLineFact, ChiRank2Fact, IntersectionFact, EffectivityFact, TwistFact,
                          MacaulayFact, PlaneCountFact>;

struct DeductionStep {
  std::string rule;
  std::string statement;
  std::vector<Fact> facts;
  std::string citation;
};

using Trace = std::vector<DeductionStep>;

// Builders that compute the value at the time the fact is recorded.
inline Fact cohomology_fact(const DivisorClass& d) { return LineCohomologyFact{d, cohomology_line(d)}; }
inline Fact chi_line_fact(const DivisorClass& d) { return ChiLineFact{d, chi_line(d)}; }
inline Fact chi_rank2_fact(const Rank2Invariants& inv) { return ChiRank2Fact{inv, chi_rank2(inv)}; }
inline Fact intersection_fact(const DivisorClass& a, const DivisorClass& b) { return IntersectionFact{a, b, intersect(a, b)}; }
inline Fact effectivity_fact(const DivisorClass& d) { return EffectivityFact{d, effectivity(d).kind}; }
inline Fact twist_fact(const Rank2Invariants& inv, const DivisorClass& t, Dualize dual) {
  return TwistFact{inv, t, dual, twist_rank2(inv, t, dual)};
}
inline Fact macaulay_fact(const Integer& value, unsigned degree) {
  return MacaulayFact{value, degree, macaulay_bound(value, degree)};
}
inline Fact plane_count_fact(const Integer& degree) {
  return PlaneCountFact{degree, cb_degree_facts(degree).max_planes_containing};
}

/// Recomputes one fact on the default lattice.
inline bool replay_fact(const Fact& fact) {
  struct Visitor {
    bool operator()(const LineCohomologyFact& f) const { return cohomology_line(f.divisor) == f.value; }
    bool operator()(const ChiLineFact& f) const { return chi_line(f.divisor) == f.value; }
    bool operator()(const ChiRank2Fact& f) const { return chi_rank2(f.invariants) == f.value; }
    bool operator()(const IntersectionFact& f) const { return intersect(f.lhs, f.rhs) == f.value; }
    bool operator()(const EffectivityFact& f) const { return effectivity(f.divisor).kind == f.value; }
    bool operator()(const TwistFact& f) const { return twist_rank2(f.input, f.twist, f.dualize) == f.value; }
    bool operator()(const MacaulayFact& f) const { return f.degree >= 1 && macaulay_bound(f.value, f.degree) == f.bound; }
    bool operator()(const PlaneCountFact& f) const {
      return f.scheme_degree >= 1 && cb_degree_facts(f.scheme_degree).max_planes_containing == f.max_planes;
    }
  };
  try {
    return std::visit(Visitor{}, fact);
  } catch (const DomainError&) {
    return false;
  }
}

struct ReplayMismatch {
  std::size_t step;
  std::size_t fact;
};

inline std::vector<ReplayMismatch> replay_mismatches(const Trace& trace) {
  std::vector<ReplayMismatch> out;
  for (std::size_t s = 0; s < trace.size(); ++s)
    for (std::size_t f = 0; f < trace[s].facts.size(); ++f)
      if (!replay_fact(trace[s].facts[f])) out.push_back({s, f});
  return out;
}

inline bool replay_trace(const Trace& trace) { return replay_mismatches(trace).empty(); }

}  // namespace k3acm
