// tests/support/oracles.hpp

// Copyright 2026  The segeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Reference implementations used only by tests. Deliberately naive and
// independent of the library's matching code paths.

#ifndef SEGEVAL_TESTS_SUPPORT_ORACLES_HPP_
#define SEGEVAL_TESTS_SUPPORT_ORACLES_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace segeval_test {

inline bool hit(double a, double b, double tol) {
  return std::abs(a - b) <= tol + 1e-9;
}

// Exhaustive maximum one-to-one matching between hyp and ref under
// |h - r| <= tol, by searching every assignment of hypotheses to unused
// references (memoized on the used-reference bitmask). Only usable for
// small instances; the point is that it cannot be wrong.
inline std::size_t brute_force_max_matching(const std::vector<double>& ref,
                                            const std::vector<double>& hyp,
                                            double tol) {
  const std::size_t nh = hyp.size();
  const std::size_t nr = ref.size();
  if (nr > 16) return SIZE_MAX;  // guard: exhaustive search only
  std::vector<int> memo((nh + 1) << nr, -1);
  // iterative stack would obscure this; recursion depth is at most nh
  struct Solver {
    const std::vector<double>& ref;
    const std::vector<double>& hyp;
    double tol;
    std::size_t nr;
    std::vector<int>& memo;
    int best(std::size_t i, std::size_t mask) {
      if (i == hyp.size()) return 0;
      int& slot = memo[(i << nr) | mask];
      if (slot >= 0) return slot;
      int result = best(i + 1, mask);  // leave hyp[i] unmatched
      for (std::size_t j = 0; j < nr; ++j) {
        if (mask & (std::size_t{1} << j)) continue;
        if (!hit(hyp[i], ref[j], tol)) continue;
        result = std::max(result, 1 + best(i + 1, mask | (std::size_t{1} << j)));
      }
      slot = result;
      return result;
    }
  } solver{ref, hyp, tol, nr, memo};
  return static_cast<std::size_t>(solver.best(0, 0));
}

// Quadratic restatement of the lenient counting rule.
struct LenientCounts {
  std::size_t hits_precision = 0;
  std::size_t hits_recall = 0;
};

inline LenientCounts naive_lenient_counts(const std::vector<double>& ref,
                                          const std::vector<double>& hyp,
                                          double tol) {
  LenientCounts c;
  for (double h : hyp)
    for (double r : ref)
      if (hit(h, r, tol)) {
        ++c.hits_precision;
        break;
      }
  for (double r : ref)
    for (double h : hyp)
      if (hit(h, r, tol)) {
        ++c.hits_recall;
        break;
      }
  return c;
}

}  // namespace segeval_test

#endif  // SEGEVAL_TESTS_SUPPORT_ORACLES_HPP_
