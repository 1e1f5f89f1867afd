#pragma once

#include <optional>

#include "k3acm/cohomology.hpp"

namespace k3acm {

/// Numeric cases of the classification of initialized aCM line bundles on a
/// smooth quartic. `trivial` stands for O_F itself.
enum class AcmCase { trivial, i, ii, iii, iv };

inline const char* to_string(AcmCase c) {
  switch (c) {
    case AcmCase::trivial: return "trivial";
    case AcmCase::i: return "i";
    case AcmCase::ii: return "ii";
    case AcmCase::iii: return "iii";
    case AcmCase::iv: return "iv";
  }
  return "?";
}

/// Cases (i)-(iii) depend on (D^2, D.h) alone; case (iv) additionally needs
/// h^0(D-h) = h^0(2h-D) = 0, which the caller supplies.
inline std::optional<AcmCase> watanabe_numeric_case(const Integer& sq, const Integer& deg, bool case_iv_vanishings) {
  if (sq == -2 && deg >= 1 && deg <= 3) return AcmCase::i;
  if (sq == 0 && deg >= 3 && deg <= 4) return AcmCase::ii;
  if (sq == 2 && deg == 5) return AcmCase::iii;
  if (sq == 4 && deg == 6 && case_iv_vanishings) return AcmCase::iv;
  return std::nullopt;
}

/// Case matched by a nonzero effective class (or `trivial` for 0). Returns
/// nullopt when D is not effective or matches no case.
inline std::optional<AcmCase> watanabe_case(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  auto status = effectivity(d, lattice);
  if (status.kind == Effectivity::zero) return AcmCase::trivial;
  if (status.kind != Effectivity::effective) return std::nullopt;
  const DivisorClass h = DivisorClass::h();
  bool vanishings = !is_effective(d - h, lattice) && !is_effective(Integer(2) * h - d, lattice);
  return watanabe_numeric_case(status.square, status.degree, vanishings);
}

/// Smallest t with D + t*h effective. Effectivity is monotone in t, so this
/// gallops outward and then bisects.
inline Integer min_effective_twist(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  const DivisorClass h = DivisorClass::h();
  auto eff = [&](const Integer& t) { return is_effective(d + t * h, lattice); };
  Integer lo, hi;  // eff(lo) false, eff(hi) true
  Integer step = 1;
  if (eff(0)) {
    while (eff(-step)) step *= 2;
    lo = -step;
    hi = -(step / 2);
  } else {
    while (!eff(step)) step *= 2;
    hi = step;
    lo = step / 2;
  }
  while (hi - lo > 1) {
    Integer mid = lo + (hi - lo) / 2;
    (eff(mid) ? hi : lo) = mid;
  }
  return hi;
}

struct AcmReport {
  bool acm = false;
  /// The unique twist D + shift*h that is initialized.
  DivisorClass initialized_twist;
  Integer shift;
  /// Case matched by the initialized twist, when it is aCM.
  std::optional<AcmCase> matched;
  /// A twist t with h^1(O(D + t*h)) != 0, when not aCM.
  std::optional<Integer> witness_twist;
};

/// Decides whether O(D) is aCM, i.e. h^1(O(D + t*h)) = 0 for every integer t.
///
/// Two routes are evaluated and must agree. The cohomological route only has
/// to inspect the finitely many twists where neither D + t*h nor its negative
/// is effective; elsewhere h^1 vanishes. The classification route applies the
/// case list to the initialized twist of D (aCM is invariant under twisting by
/// h, and the case list characterizes initialized aCM line bundles).
inline AcmReport is_acm_line(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  require_default_lattice(lattice);
  const DivisorClass h = DivisorClass::h();
  AcmReport report;
  report.shift = min_effective_twist(d, lattice);
  report.initialized_twist = d + report.shift * h;

  // Largest t with D + t*h anti-effective.
  const Integer last_anti = -min_effective_twist(-d, lattice);
  const Integer window = report.shift - last_anti - 1;
  // h^1 = -2 - D^2/2 vanishes only where D^2 = -4; a quadratic in t takes
  // that value at most twice, so inspecting three twists settles a longer
  // window.
  const Integer first = last_anti + 1;
  const Integer stop = window > 2 ? first + 3 : report.shift;
  bool cohomological_acm = true;
  for (Integer t = first; t < stop; ++t) {
    if (!h1_vanishes(d + t * h, lattice)) {
      cohomological_acm = false;
      report.witness_twist = t;
      break;
    }
  }
  if (cohomological_acm && window > 2)
    throw ConsistencyError("three consecutive twists of " + to_string(d) + " all have D^2 = -4");

  auto matched = watanabe_case(report.initialized_twist, lattice);
  if (matched.has_value() != cohomological_acm)
    throw ConsistencyError("aCM routes disagree for " + to_string(d) + ": cohomology says " +
                           (cohomological_acm ? "aCM" : "not aCM") + ", initialized twist " +
                           to_string(report.initialized_twist) + (matched ? " matches" : " matches no") + " case");
  report.acm = cohomological_acm;
  if (report.acm) report.matched = matched;
  return report;
}

}  // namespace k3acm
