#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3acm/errors.hpp"
#include "k3acm/integer.hpp"

namespace k3acm {

inline Integer binomial(const Integer& n, unsigned k) {
  if (n < k) return 0;
  Integer result = 1;
  for (unsigned i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

/// Macaulay's bound value^<degree>: the largest h(degree+1) a standard graded
/// algebra generated in degree 1 can have when h(degree) = value. Writes value
/// in its degree-th binomial representation
///   value = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j),  k_d > ... > k_j >= j >= 1
/// and returns C(k_d + 1, d + 1) + ... + C(k_j + 1, j + 1).
inline Integer macaulay_bound(const Integer& value, unsigned degree) {
  if (degree < 1) throw DomainError("invalid-degree", "Macaulay bound needs degree >= 1");
  if (value < 0) throw DomainError("invalid-value", "Hilbert function values are nonnegative");
  Integer rest = value;
  Integer bound = 0;
  for (unsigned i = degree; i >= 1 && rest > 0; --i) {
    // Largest k with C(k, i) <= rest; C(i, i) = 1 <= rest.
    Integer lo = i, step = 1;
    while (binomial(lo + step, i) <= rest) {
      lo += step;
      step *= 2;
    }
    Integer hi = lo + step;  // C(hi, i) > rest
    while (hi - lo > 1) {
      Integer mid = lo + (hi - lo) / 2;
      (binomial(mid, i) <= rest ? lo : hi) = mid;
    }
    rest -= binomial(lo, i);
    bound += binomial(lo + 1, i + 1);
  }
  return bound;
}

/// Hilbert function of a graded quotient of k[x0..x3], indexed by degree,
/// starting with h(0).
class HilbertFunction {
 public:
  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<Integer> values) : values_(std::move(values)) {
    for (const auto& v : values_)
      if (v < 0) throw DomainError("invalid-hilbert-function", "Hilbert function values are nonnegative");
  }

  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  const Integer& operator[](std::size_t degree) const { return values_.at(degree); }
  const std::vector<Integer>& values() const { return values_; }

 private:
  std::vector<Integer> values_;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::optional<std::size_t> violation_degree;
  std::string reason;
  /// growth_bounds[i] = macaulay_bound(h(i+1), i+1), the cap on h(i+2).
  std::vector<Integer> growth_bounds;
};

/// Checks that `hf` can be the Hilbert function of a zero-dimensional
/// subscheme of degree `total_degree` in projective 3-space: h(0) = 1,
/// h(1) <= 4, Macaulay growth in every degree, nondecreasing, and constant
/// once it reaches the degree of the scheme.
inline AdmissibilityReport admissible_point_hilbert(const HilbertFunction& hf, const Integer& total_degree,
                                                    unsigned linear_forms = 4) {
  if (hf.empty()) throw DomainError("empty-hilbert-function", "Hilbert function must have at least h(0)");
  AdmissibilityReport report;
  auto fail = [&](std::size_t degree, std::string why) {
    report.admissible = false;
    report.violation_degree = degree;
    report.reason = std::move(why);
    return report;
  };
  if (hf[0] != 1) return fail(0, "h(0) = " + hf[0].str() + ", expected 1");
  for (std::size_t d = 1; d < hf.size(); ++d) {
    const Integer& prev = hf[d - 1];
    const Integer& cur = hf[d];
    if (d == 1) {
      if (cur > linear_forms)
        return fail(1, "h(1) = " + cur.str() + " exceeds the " + std::to_string(linear_forms) + " linear forms");
    } else {
      Integer bound = macaulay_bound(prev, static_cast<unsigned>(d - 1));
      report.growth_bounds.push_back(bound);
      if (cur > bound)
        return fail(d, "h(" + std::to_string(d) + ") = " + cur.str() + " exceeds Macaulay bound " + bound.str());
    }
    if (cur < prev)
      return fail(d, "h(" + std::to_string(d) + ") = " + cur.str() + " decreases from " + prev.str());
    if (cur > total_degree)
      return fail(d, "h(" + std::to_string(d) + ") = " + cur.str() + " exceeds scheme degree " +
                         total_degree.str());
    if (prev == total_degree && cur != total_degree)
      return fail(d, "h(" + std::to_string(d) + ") leaves the stable value " + total_degree.str());
  }
  return report;
}

/// Small classical facts about zero-dimensional subschemes of projective
/// 3-space, as used in the case analysis.
struct SchemeFacts {
  Integer degree;
  /// Independent planes through the scheme: 4 - h(1). Without a Hilbert
  /// function the scheme is taken in linearly general position.
  Integer planes_containing;
  /// Largest possible number of independent planes through a scheme of this
  /// degree: 3 for a point, 2 otherwise (any longer scheme spans a line).
  Integer max_planes_containing;
  /// Degree at most 2 implies arithmetically Gorenstein.
  bool always_ag = false;
  /// A single point is never Cayley-Bacharach with respect to a globally
  /// generated line bundle with sections; undecided for larger degrees.
  std::optional<bool> cb_wrt_globally_generated;
  /// For an aG scheme with Hilbert function (1, n1, ..., n_{s-1}, d, ...),
  /// n_{s-1} < d: the twist s it is Cayley-Bacharach for.
  std::optional<std::size_t> cb_twist_if_ag;
};

inline SchemeFacts cb_degree_facts(const Integer& scheme_degree, const HilbertFunction& hilbert = {}) {
  if (scheme_degree < 1) throw DomainError("invalid-degree", "scheme degree must be >= 1");
  SchemeFacts facts;
  facts.degree = scheme_degree;
  Integer h1 = scheme_degree < 4 ? scheme_degree : Integer(4);
  if (hilbert.size() > 1) {
    if (hilbert[1] > scheme_degree || hilbert[1] > 4 || hilbert[1] < 1)
      throw DomainError("invalid-hilbert-function",
                        "h(1) = " + hilbert[1].str() + " is impossible for degree " + scheme_degree.str());
    h1 = hilbert[1];
  }
  facts.planes_containing = 4 - h1;
  facts.max_planes_containing = scheme_degree == 1 ? 3 : 2;
  facts.always_ag = scheme_degree <= 2;
  if (scheme_degree == 1) facts.cb_wrt_globally_generated = false;
  for (std::size_t s = 1; s < hilbert.size(); ++s)
    if (hilbert[s] == scheme_degree && hilbert[s - 1] < scheme_degree) {
      facts.cb_twist_if_ag = s;
      break;
    }
  return facts;
}

}  // namespace k3acm
