#pragma once

#include <span>
#include <vector>

#include "biasmax/concave_curve.hpp"
#include "biasmax/groups.hpp"
#include "biasmax/selection.hpp"
#include "biasmax/utility_matrix.hpp"

namespace biasmax {

/// Reference-group objective used by Part 1: sums observed utilities over the
/// subset's intersection with group 1 and rescales them by n/|G_1| before the
/// curves, so a reference-only subset estimates a full-population one.
class RescaledObjective {
 public:
  RescaledObjective(const UtilityMatrix& observed, const GroupStructure& groups,
                    std::span<const ConcaveCurve> curves);

  double eval(std::span<const int> subset) const;
  double scale() const { return scale_; }

 private:
  const UtilityMatrix* observed_;
  const GroupStructure* groups_;
  std::vector<ConcaveCurve> curves_;
  double scale_;
};

RescaledObjective rescaled_objective(const UtilityMatrix& observed, const GroupStructure& groups,
                                     std::span<const ConcaveCurve> curves);

struct Part1Result {
  BudgetVector budgets;
  std::vector<int> reference_set;  // S~ in selection order
  bool seeds_overflow = false;
  bool categories_overlap = false;  // warn-and-proceed flag
};

// Part 1: seed each category with its top ceil(sqrt(k)) reference-group items
// by singleton rescaled gain, grow greedily on the rescaled objective until
// |S~| >= floor(k |G_1| / n), then apportion k over the per-category counts
// (largest remainder, every nonempty count gets at least 1 while k allows).
Part1Result part1_budgets(const UtilityMatrix& observed, int k, const GroupStructure& groups,
                          const CategoryStructure& categories, std::span<const ConcaveCurve> curves);

// Part 2: per category j, greedily pick <= k_j items of C_j by observed
// utility subject to per-group caps floor(k |G_l ∩ C_j| / n), relaxed by
// largest-remainder increments until the category budget is reachable.
// Shortfalls are flagged, never thrown.
SelectionResult part2_select(const UtilityMatrix& observed, const BudgetVector& budgets,
                             const GroupStructure& groups, const CategoryStructure& categories,
                             std::span<const ConcaveCurve> curves);

// The full two-part algorithm. Group 1 is the reference: its observed
// utilities are assumed unbiased. Runs on observed data only; `latent`, when
// given, is used solely to fill the audit value of the result.
//
// The near-optimal latent-utility behavior under disjoint categories is an
// asymptotic property: it needs budgets k of order eps^-4 tau^-4 gamma^-10
// m^8 (up to log factors) for an eps-accurate selection, where tau bounds
// the nonzero utility range and gamma the smallest group fraction. That
// threshold is documentation, not a runtime check; smaller budgets run fine
// and are what the experiment harness exercises.
SelectionResult algorithm1(const UtilityMatrix& observed, int k, const GroupStructure& groups,
                           const CategoryStructure& categories, std::span<const ConcaveCurve> curves,
                           const UtilityMatrix* latent = nullptr);

// Largest-remainder apportionment of `total` over nonnegative weights;
// whenever total >= #positive weights, every positive weight receives >= 1.
std::vector<int> apportion_largest_remainder(int total, std::span<const long long> weights,
                                             std::vector<double>* remainders_out = nullptr);

}  // namespace biasmax
