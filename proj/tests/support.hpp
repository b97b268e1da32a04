#pragma once

// Shared helpers for the test suites. The brute-force evaluators here stay
// independent of the library's own maximizers so they can serve as oracles.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "biasmax/concave_curve.hpp"
#include "biasmax/objective.hpp"
#include "biasmax/rng.hpp"
#include "biasmax/utility_matrix.hpp"

namespace testsupport {

using biasmax::ConcaveCurve;
using biasmax::ObjectiveSpec;
using biasmax::Rng;
using biasmax::UtilityMatrix;

// Direct evaluation of sum_j g_j(sum_{i in S} W_ij) without the library's
// evaluator: the independent route for cross-checks.
inline double direct_value(const std::vector<ConcaveCurve>& curves, const UtilityMatrix& w,
                           const std::vector<int>& subset) {
  double total = 0.0;
  for (int j = 0; j < w.attrs(); ++j) {
    double sum = 0.0;
    for (int i : subset) sum += w(i, j);
    total += curves[j](sum);
  }
  return total;
}

// Best value over all subsets of size <= k satisfying `ok`, by bitmask scan.
// Only for n <= 20.
inline double bitmask_opt(const std::vector<ConcaveCurve>& curves, const UtilityMatrix& w, int k,
                          const std::function<bool(const std::vector<int>&)>& ok = {}) {
  const int n = w.items();
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > k) continue;
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    if (ok && !ok(subset)) continue;
    best = std::max(best, direct_value(curves, w, subset));
  }
  return best;
}

// Random matrix with entries in [lo, hi), an optional zero fraction.
inline UtilityMatrix random_matrix(Rng& rng, int n, int m, double lo, double hi, double zero_prob = 0.0) {
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(n) * m);
  for (int c = 0; c < n * m; ++c) {
    if (zero_prob > 0.0 && rng.next_double() < zero_prob)
      data.push_back(0.0);
    else
      data.push_back(lo + (hi - lo) * rng.next_double());
  }
  return UtilityMatrix(n, m, std::move(data));
}

inline std::vector<ConcaveCurve> all_curve_kinds() {
  return {ConcaveCurve::linear(),           ConcaveCurve::sqrt(),
          ConcaveCurve::scaled_sqrt(0.05),  ConcaveCurve::log1p(),
          ConcaveCurve::weighted_log1p(2.5), ConcaveCurve::cube_root(),
          ConcaveCurve::neg_exp_coverage(0.7)};
}

// Random subset of [0, n) of the given size.
inline std::vector<int> random_subset(Rng& rng, int n, int size) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  rng.shuffle(pool);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace testsupport
