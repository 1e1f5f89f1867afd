#pragma once

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include "k3acm/errors.hpp"
#include "k3acm/integer.hpp"

namespace k3acm {

/// The class x*h + y*A in the rank-2 Picard lattice, where h is the hyperplane
/// section and A the class of a projectively normal sextic of genus 3.
struct DivisorClass {
  Integer x;
  Integer y;

  DivisorClass() = default;
  DivisorClass(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}

  static DivisorClass zero() { return {0, 0}; }
  static DivisorClass h() { return {1, 0}; }
  static DivisorClass A() { return {0, 1}; }

  bool is_zero() const { return x == 0 && y == 0; }

  DivisorClass operator-() const { return {-x, -y}; }
  DivisorClass& operator+=(const DivisorClass& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Integer& k, const DivisorClass& d) { return {k * d.x, k * d.y}; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }
  // Lexicographic by (x, y); the canonical order of every candidate list.
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// Renders as a combination of h and A, e.g. "3h-A", "-2h+3A", "0".
inline std::string to_string(const DivisorClass& d) {
  if (d.is_zero()) return "0";
  auto term = [](const Integer& c, char symbol, bool leading) {
    std::string out;
    if (c < 0)
      out += '-';
    else if (!leading)
      out += '+';
    Integer mag = abs(c);
    if (mag != 1) out += mag.str();
    out += symbol;
    return out;
  };
  std::string out;
  if (d.x != 0) out += term(d.x, 'h', true);
  if (d.y != 0) out += term(d.y, 'A', d.x == 0);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const DivisorClass& d) { return os << to_string(d); }

/// Accepts "X,Y" (meaning Xh+YA) or a symbolic combination such as "h",
/// "3h-A", "-2h+3A", "2A". Whitespace is ignored.
inline DivisorClass parse_divisor(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw UsageError("empty divisor class");

  if (auto comma = s.find(','); comma != std::string::npos) {
    return {parse_integer(std::string_view(s).substr(0, comma)),
            parse_integer(std::string_view(s).substr(comma + 1))};
  }
  if (s == "0") return DivisorClass::zero();

  DivisorClass result;
  std::size_t i = 0;
  bool seen_h = false, seen_a = false;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw UsageError("malformed divisor class '" + s + "'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer coeff = start == i ? Integer(1) : Integer(s.substr(start, i - start));
    if (negative) coeff = -coeff;
    if (i == s.size()) throw UsageError("malformed divisor class '" + s + "' (missing h or A)");
    if (s[i] == 'h' && !seen_h) {
      result.x = coeff;
      seen_h = true;
    } else if (s[i] == 'A' && !seen_a) {
      result.y = coeff;
      seen_a = true;
    } else {
      throw UsageError("malformed divisor class '" + s + "'");
    }
    ++i;
  }
  return result;
}

/// Symmetric intersection form on the two generators. Validated at
/// construction: even diagonal (so every line bundle has integral Euler
/// characteristic) and negative determinant (hyperbolic signature).
class GramLattice {
 public:
  GramLattice() : g11_(4), g12_(6), g22_(4) {}

  GramLattice(Integer g11, Integer g12, Integer g22)
      : g11_(std::move(g11)), g12_(std::move(g12)), g22_(std::move(g22)) {
    if (!is_even(g11_) || !is_even(g22_))
      throw DomainError("invalid-lattice", "Gram matrix diagonal must be even (got " + g11_.str() + ", " +
                                               g22_.str() + ")");
    if (determinant() >= 0)
      throw DomainError("invalid-lattice",
                        "Gram matrix must have negative determinant (got " + determinant().str() + ")");
  }

  /// The general determinantal quartic: h^2 = A^2 = 4, hA = 6.
  static const GramLattice& standard() {
    static const GramLattice lattice;
    return lattice;
  }

  const Integer& g11() const { return g11_; }
  const Integer& g12() const { return g12_; }
  const Integer& g22() const { return g22_; }
  Integer determinant() const { return g11_ * g22_ - g12_ * g12_; }
  bool is_default() const { return g11_ == 4 && g12_ == 6 && g22_ == 4; }

  friend bool operator==(const GramLattice& a, const GramLattice& b) {
    return a.g11_ == b.g11_ && a.g12_ == b.g12_ && a.g22_ == b.g22_;
  }

 private:
  Integer g11_, g12_, g22_;
};

inline void require_default_lattice(const GramLattice& lattice) {
  if (!lattice.is_default())
    throw DomainError("unsupported-lattice",
                      "criterion proved only for the general determinantal quartic (Gram 4,6,4)");
}

inline Integer intersect(const DivisorClass& d, const DivisorClass& u,
                         const GramLattice& lattice = GramLattice::standard()) {
  return lattice.g11() * d.x * u.x + lattice.g12() * (d.x * u.y + d.y * u.x) + lattice.g22() * d.y * u.y;
}

inline Integer square(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  return intersect(d, d, lattice);
}

/// D.h, the degree of D in the hyperplane embedding.
inline Integer degree(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  return intersect(d, DivisorClass::h(), lattice);
}

/// Riemann-Roch on a K3 surface for a line bundle: chi(O(D)) = 2 + D^2/2.
inline Integer chi_line(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  return 2 + checked_half(square(d, lattice));
}

struct Rank2Invariants {
  DivisorClass c1;
  Integer c2;

  friend bool operator==(const Rank2Invariants& a, const Rank2Invariants& b) { return a.c1 == b.c1 && a.c2 == b.c2; }
};

/// chi(E) = 4 + c1^2/2 - c2 for a rank-2 bundle on a K3 surface.
inline Integer chi_rank2(const Rank2Invariants& inv, const GramLattice& lattice = GramLattice::standard()) {
  return 4 + checked_half(square(inv.c1, lattice)) - inv.c2;
}

enum class Dualize : bool { no = false, yes = true };

/// Chern classes of E(T) or, when dualizing, of E^v(T).
inline Rank2Invariants twist_rank2(const Rank2Invariants& inv, const DivisorClass& twist, Dualize dualize,
                                   const GramLattice& lattice = GramLattice::standard()) {
  const DivisorClass c1 = dualize == Dualize::yes ? -inv.c1 : inv.c1;
  return {c1 + Integer(2) * twist, inv.c2 + intersect(c1, twist, lattice) + square(twist, lattice)};
}

struct CurveInvariants {
  Integer degree;
  Integer arithmetic_genus;
  Integer h0;

  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

enum class SquareParity { zero_mod_16, four_mod_8 };

inline const char* to_string(SquareParity p) {
  return p == SquareParity::zero_mod_16 ? "0 mod 16" : "4 mod 8";
}

struct ParityReport {
  Integer square;
  SquareParity parity;
  bool both_even;
};

/// On the default lattice D^2 = 4(x^2 + 3xy + y^2): it is 0 mod 16 exactly
/// when x and y are both even, and 4 mod 8 otherwise.
inline ParityReport parity_class(const DivisorClass& d, const GramLattice& lattice = GramLattice::standard()) {
  require_default_lattice(lattice);
  Integer sq = square(d, lattice);
  bool both_even = is_even(d.x) && is_even(d.y);
  SquareParity parity = both_even ? SquareParity::zero_mod_16 : SquareParity::four_mod_8;
  bool consistent = both_even ? mod_floor(sq, 16) == 0 : mod_floor(sq, 8) == 4;
  if (!consistent)
    throw ConsistencyError("parity of " + to_string(d) + " disagrees with D^2 = " + sq.str());
  return {std::move(sq), parity, both_even};
}

}  // namespace k3acm
