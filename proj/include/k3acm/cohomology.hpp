#pragma once

#include "k3acm/divisor.hpp"

namespace k3acm {

struct CohomologyTriple {
  Integer h0;
  Integer h1;
  Integer h2;

  /// Serre duality on a K3 surface: h^i(O(-D)) = h^{2-i}(O(D)).
  CohomologyTriple reversed() const { return {h2, h1, h0}; }
  Integer euler_characteristic() const { return h0 - h1 + h2; }

  friend bool operator==(const CohomologyTriple&, const CohomologyTriple&) = default;
};

/// Exact cohomology of O(D) on the general determinantal quartic.
///
/// Effective D != 0 has no fixed components and D^2 >= 4, so the general member
/// of |D| is smooth and irreducible and h^1 vanishes; anti-effective classes
/// follow by duality. When neither D nor -D is effective both h^0 and h^2
/// vanish and Riemann-Roch leaves h^1 = -chi. The elliptic-pencil case D^2 = 0
/// never arises because D^2 = 0 forces D = 0 on this lattice.
inline CohomologyTriple cohomology_line(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  auto status = effectivity(d, lattice);
  switch (status.kind) {
    case Effectivity::zero:
      return {1, 0, 1};
    case Effectivity::effective:
      return {2 + checked_half(status.square), 0, 0};
    case Effectivity::anti_effective:
      return {0, 0, 2 + checked_half(status.square)};
    case Effectivity::neither: {
      Integer h1 = -chi_line(d, lattice);
      if (h1 < 0)
        throw ConsistencyError("h^1(O(" + to_string(d) + ")) would be negative (" + h1.str() +
                               "); neither D nor -D effective should force D^2 <= -4");
      return {0, std::move(h1), 0};
    }
  }
  throw ConsistencyError("unreachable effectivity variant");
}

inline bool h1_vanishes(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  return cohomology_line(d, lattice).h1 == 0;
}

}  // namespace k3acm
