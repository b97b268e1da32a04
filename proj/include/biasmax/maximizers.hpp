#pragma once

#include <array>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "biasmax/concave_curve.hpp"
#include "biasmax/groups.hpp"
#include "biasmax/objective.hpp"
#include "biasmax/selection.hpp"

namespace biasmax {

// Standard greedy under a cardinality budget: repeatedly adds the item with
// the largest marginal gain, ties broken by lowest item id, and keeps
// selecting through zero gains until |S| = min(k, n). O(nk) gain evaluations.
SelectionResult greedy_cardinality(const ObjectiveSpec& spec, int k);

// Greedy restricted by per-group caps. Infeasible budgets are not an error:
// the result carries the largest feasible selection with budget_unmet set.
SelectionResult greedy_with_caps(const ObjectiveSpec& spec, int k, const GroupStructure& groups,
                                 std::span<const int> caps);

// Exact optimum over feasible subsets of size <= k by lexicographic DFS; ties
// resolve to the lexicographically smallest subset. Enforces C(n, k) <= 1e7.
std::pair<std::vector<int>, double> exhaustive_opt(
    const ObjectiveSpec& spec, int k,
    const std::function<bool(std::span<const int>)>& feasible = {});

/// Two-item-type instance: items [0, type_a_count) share latent row `a_row`,
/// the rest share `b_row`; two groups with multiplicative bias betas[l].
struct TwoTypeInstance {
  std::vector<ConcaveCurve> curves;
  std::vector<double> a_row;
  std::vector<double> b_row;
  int type_a_count = 0;
  std::array<double, 2> betas{1.0, 1.0};
};

struct TwoTypeCounts {
  int a1 = 0, a2 = 0;  // type-A picks from group 1 / group 2
  int b1 = 0, b2 = 0;  // type-B picks from group 1 / group 2
  int total() const { return a1 + a2 + b1 + b2; }
};

// Exact observed-utility maximizer for two-type two-group instances under
// per-group caps: enumerates (a1, a2) and fills the type-B cells greedily,
// O(k^2) overall. Returns the maximizing counts and their *latent* value.
std::pair<TwoTypeCounts, double> two_type_exact_opt(const TwoTypeInstance& instance,
                                                    const GroupStructure& groups,
                                                    std::span<const int> caps, int k);

// Latent/observed value of a count vector on a two-type instance.
double two_type_latent_value(const TwoTypeInstance& instance, const TwoTypeCounts& counts);
double two_type_observed_value(const TwoTypeInstance& instance, const TwoTypeCounts& counts);

}  // namespace biasmax
