#pragma once

#include <string>

#include "k3acm/lattice.hpp"

namespace k3acm {

enum class Effectivity { zero, effective, anti_effective, neither };

inline const char* to_string(Effectivity e) {
  switch (e) {
    case Effectivity::zero: return "zero";
    case Effectivity::effective: return "effective";
    case Effectivity::anti_effective: return "anti-effective";
    case Effectivity::neither: return "neither";
  }
  return "?";
}

inline Effectivity effectivity_from_string(const std::string& s) {
  if (s == "zero") return Effectivity::zero;
  if (s == "effective") return Effectivity::effective;
  if (s == "anti-effective") return Effectivity::anti_effective;
  if (s == "neither") return Effectivity::neither;
  throw UsageError("unknown effectivity '" + s + "'");
}

struct EffectivityStatus {
  Effectivity kind;
  Integer square;  // D^2
  Integer degree;  // D.h

  // The zero class counts as effective.
  bool is_effective() const { return kind == Effectivity::zero || kind == Effectivity::effective; }
};

namespace detail {
// Nonzero D is effective iff D.h >= 2 and D^2 >= 4 on the general
// determinantal quartic. Integer tests only.
inline bool nonzero_effective(const Integer& sq, const Integer& deg) { return deg >= 2 && sq >= 4; }
}  // namespace detail

inline EffectivityStatus effectivity(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  require_default_lattice(lattice);
  Integer sq = square(d, lattice);
  Integer deg = degree(d, lattice);
  Effectivity kind;
  if (d.is_zero())
    kind = Effectivity::zero;
  else if (detail::nonzero_effective(sq, deg))
    kind = Effectivity::effective;
  else if (detail::nonzero_effective(sq, -deg))  // (-D)^2 = D^2
    kind = Effectivity::anti_effective;
  else
    kind = Effectivity::neither;
  return {kind, std::move(sq), std::move(deg)};
}

inline bool is_effective(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  return effectivity(d, lattice).is_effective();
}

// Every effective class is base-point free here (no fixed components exist on
// this lattice), so the two predicates coincide.
inline bool is_globally_generated(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  return is_effective(d, lattice);
}

/// h^0(O(D)) != 0 and h^0(O(D-h)) = 0.
inline bool is_initialized_line(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  return is_effective(d, lattice) && !is_effective(d - DivisorClass::h(), lattice);
}

/// Degree, arithmetic genus and h^0 of a nonzero effective class.
inline CurveInvariants curve_invariants(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  auto status = effectivity(d, lattice);
  if (status.kind != Effectivity::effective)
    throw DomainError("not-effective", "curve invariants need a nonzero effective class, got " + to_string(d) +
                                           " (" + to_string(status.kind) + ")");
  Integer half = checked_half(status.square);
  return {status.degree, 1 + half, 2 + half};
}

}  // namespace k3acm
