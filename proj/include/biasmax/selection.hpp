#pragma once

#include <optional>
#include <numeric>
#include <vector>

namespace biasmax {

/// Per-category budgets k_j with the audit trail of how they were produced.
struct BudgetVector {
  std::vector<int> per_category;   // k_j, sums to k
  std::vector<int> source_counts;  // |S~ ∩ C_j| they were apportioned from
  double scale_factor = 1.0;       // n / |G_1|
  std::vector<double> remainders;  // apportionment remainders, for audits

  int total() const { return std::accumulate(per_category.begin(), per_category.end(), 0); }
  bool empty() const { return per_category.empty(); }
};

/// A chosen subset plus audit data. `items` is in selection order (the step
/// column of the selection CSV is its index).
struct SelectionResult {
  std::vector<int> items;
  double objective_value = 0.0;            // value under the objective the maximizer ran on
  std::optional<double> latent_value;      // filled when a latent matrix is supplied
  std::optional<double> observed_value;
  std::vector<int> group_counts;           // per-group counts when groups were known
  BudgetVector budgets;                    // only for the two-part algorithm
  bool budget_unmet = false;
  bool seeds_overflow = false;
};

}  // namespace biasmax
