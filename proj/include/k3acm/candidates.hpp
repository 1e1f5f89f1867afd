#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "k3acm/acm.hpp"

namespace k3acm {

enum class CandidateBranch { effective, noneffective, initialized_acm };

inline const char* to_string(CandidateBranch b) {
  switch (b) {
    case CandidateBranch::effective: return "effective-branch";
    case CandidateBranch::noneffective: return "noneffective-branch";
    case CandidateBranch::initialized_acm: return "initialized-acm";
  }
  return "?";
}

/// Sorted, duplicate-free list of divisor classes with its provenance.
struct CandidateList {
  std::vector<DivisorClass> classes;
  CandidateBranch branch;
  int box = 0;

  bool contains(const DivisorClass& d) const { return std::binary_search(classes.begin(), classes.end(), d); }
  std::size_t size() const { return classes.size(); }
};

inline constexpr int kDefaultScanBox = 32;

namespace detail {

// Square scan over |x|, |y| <= box. Any hit on the outer shell means the box
// may have cut the region off, so it is a hard error.
inline CandidateList scan_box(int box, int min_box, CandidateBranch branch,
                              const std::function<bool(const DivisorClass&)>& keep) {
  if (box < min_box)
    throw DomainError("box-too-small", "scan box " + std::to_string(box) + " is below the minimum " +
                                           std::to_string(min_box));
  CandidateList out{{}, branch, box};
  for (int x = -box; x <= box; ++x)
    for (int y = -box; y <= box; ++y) {
      DivisorClass d{x, y};
      if (!keep(d)) continue;
      if (x == -box || x == box || y == -box || y == box)
        throw DomainError("boundary-hit", "candidate " + to_string(d) + " lies on the scan-box shell |x|,|y| = " +
                                              std::to_string(box) + "; enlarge --box");
      out.classes.push_back(std::move(d));
    }
  // Loop order is already lexicographic in (x, y).
  return out;
}

}  // namespace detail

/// Initialized aCM line bundles: 0, A and 3h-A on the default lattice.
inline CandidateList enumerate_initialized_acm_lines(int box = kDefaultScanBox) {
  return detail::scan_box(box, 8, CandidateBranch::initialized_acm, [](const DivisorClass& d) {
    return is_initialized_line(d) && is_acm_line(d).acm;
  });
}

/// Effective c1 with 6h - c1 effective, i.e. c1 and O(6h - c1) both globally
/// generated.
inline CandidateList enumerate_c1_effective(int box = kDefaultScanBox) {
  const DivisorClass six_h{6, 0};
  return detail::scan_box(box, 16, CandidateBranch::effective, [&](const DivisorClass& d) {
    return is_effective(d) && is_effective(six_h - d);
  });
}

/// Non-effective c1 with c1 + h and 6h - c1 effective.
inline CandidateList enumerate_c1_noneffective(int box = kDefaultScanBox) {
  const DivisorClass six_h{6, 0};
  return detail::scan_box(box, 16, CandidateBranch::noneffective, [&](const DivisorClass& d) {
    return !is_effective(d) && is_effective(d + DivisorClass::h()) && is_effective(six_h - d);
  });
}

}  // namespace k3acm
