#include "biasmax/maximizers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "biasmax/errors.hpp"

namespace biasmax {

namespace {

// Shared greedy loop; `feasible(item)` gates candidates each step.
SelectionResult greedy_loop(const ObjectiveSpec& spec, int target,
                            const std::function<bool(int)>& item_feasible) {
  SelectionResult result;
  ObjectiveAccumulator acc(spec);
  std::vector<char> chosen(spec.items(), 0);
  [[maybe_unused]] double last_value = 0.0;
  while (static_cast<int>(result.items.size()) < target) {
    int best = -1;
    double best_gain = 0.0;
    for (int i = 0; i < spec.items(); ++i) {
      if (chosen[i] || !item_feasible(i)) continue;
      double gain = acc.gain_if_added(i);
      if (best == -1 || gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == -1) break;  // no feasible item left
    chosen[best] = 1;
    acc.add(best);
    // Monotone objectives: value never decreases step to step.
    assert(acc.value() >= last_value - 1e-9);
    last_value = acc.value();
    result.items.push_back(best);
  }
  result.objective_value = acc.value();
  return result;
}

double combinations_bound(int n, int k) {
  double c = 1.0;
  int r = std::min(k, n - k);
  for (int i = 1; i <= r; ++i) {
    c *= static_cast<double>(n - r + i) / i;
    if (c > 1e18) return c;
  }
  return c;
}

}  // namespace

SelectionResult greedy_cardinality(const ObjectiveSpec& spec, int k) {
  if (k < 1) throw InputError("greedy_cardinality: k must be at least 1");
  return greedy_loop(spec, std::min(k, spec.items()), [](int) { return true; });
}

SelectionResult greedy_with_caps(const ObjectiveSpec& spec, int k, const GroupStructure& groups,
                                 std::span<const int> caps) {
  if (k < 1) throw InputError("greedy_with_caps: k must be at least 1");
  if (groups.items() != spec.items()) throw InputError("greedy_with_caps: group structure size mismatch");
  if (static_cast<int>(caps.size()) != groups.group_count)
    throw InputError("greedy_with_caps: need one cap per group");
  for (int c : caps)
    if (c < 0) throw InputError("greedy_with_caps: caps must be nonnegative");

  std::vector<int> counts(groups.group_count, 0);
  SelectionResult result;
  ObjectiveAccumulator acc(spec);
  std::vector<char> chosen(spec.items(), 0);
  const int target = std::min(k, spec.items());
  while (static_cast<int>(result.items.size()) < target) {
    int best = -1;
    double best_gain = 0.0;
    for (int i = 0; i < spec.items(); ++i) {
      if (chosen[i]) continue;
      int g = groups.assignment[i];
      if (counts[g] >= caps[g]) continue;
      double gain = acc.gain_if_added(i);
      if (best == -1 || gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == -1) break;
    chosen[best] = 1;
    ++counts[groups.assignment[best]];
    acc.add(best);
    result.items.push_back(best);
  }
  result.objective_value = acc.value();
  result.group_counts = counts;
  for (int l = 0; l < groups.group_count; ++l) assert(counts[l] <= caps[l]);
  result.budget_unmet = static_cast<int>(result.items.size()) < k;
  return result;
}

std::pair<std::vector<int>, double> exhaustive_opt(
    const ObjectiveSpec& spec, int k, const std::function<bool(std::span<const int>)>& feasible) {
  const int n = spec.items();
  if (k < 0) throw InputError("exhaustive_opt: k must be nonnegative");
  const int depth = std::min(k, n);
  if (combinations_bound(n, depth) > 1e7)
    throw SizeError("exhaustive_opt: C(" + std::to_string(n) + "," + std::to_string(depth) +
                    ") exceeds the 1e7 enumeration bound");

  std::vector<int> current;
  std::vector<int> best;
  double best_value = -1.0;
  std::vector<double> sums(spec.attrs(), 0.0);

  auto consider = [&](double value) {
    if (value > best_value) {
      best_value = value;
      best = current;
    }
  };

  // Lexicographic DFS; first strict improvement wins, so ties resolve to the
  // lexicographically smallest subset.
  auto dfs = [&](auto&& self, int next) -> void {
    double value = 0.0;
    for (int j = 0; j < spec.attrs(); ++j) value += spec.curves[j](sums[j]);
    if (!feasible || feasible(current)) consider(value);
    if (static_cast<int>(current.size()) == depth) return;
    for (int i = next; i < n; ++i) {
      current.push_back(i);
      for (int j = 0; j < spec.attrs(); ++j) sums[j] += spec.utilities(i, j);
      self(self, i + 1);
      for (int j = 0; j < spec.attrs(); ++j) sums[j] -= spec.utilities(i, j);
      current.pop_back();
    }
  };
  dfs(dfs, 0);

  if (best_value < 0.0) return {{}, 0.0};  // nothing feasible, not even the empty set
  return {best, best_value};
}

double two_type_latent_value(const TwoTypeInstance& inst, const TwoTypeCounts& c) {
  double v = 0.0;
  for (std::size_t j = 0; j < inst.curves.size(); ++j) {
    double sum = (c.a1 + c.a2) * inst.a_row[j] + (c.b1 + c.b2) * inst.b_row[j];
    v += inst.curves[j](sum);
  }
  return v;
}

double two_type_observed_value(const TwoTypeInstance& inst, const TwoTypeCounts& c) {
  double v = 0.0;
  for (std::size_t j = 0; j < inst.curves.size(); ++j) {
    double sum = (c.a1 * inst.betas[0] + c.a2 * inst.betas[1]) * inst.a_row[j] +
                 (c.b1 * inst.betas[0] + c.b2 * inst.betas[1]) * inst.b_row[j];
    v += inst.curves[j](sum);
  }
  return v;
}

std::pair<TwoTypeCounts, double> two_type_exact_opt(const TwoTypeInstance& inst,
                                                    const GroupStructure& groups,
                                                    std::span<const int> caps, int k) {
  if (groups.group_count != 2) throw InputError("two_type_exact_opt: exactly two groups required");
  if (caps.size() != 2) throw InputError("two_type_exact_opt: need two caps");
  if (inst.type_a_count < 0 || inst.type_a_count > groups.items())
    throw InputError("two_type_exact_opt: type_a_count out of range");
  if (inst.a_row.size() != inst.curves.size() || inst.b_row.size() != inst.curves.size())
    throw InputError("two_type_exact_opt: row width must match curve count");

  // Cell availabilities from the sampled groups.
  int n_a1 = 0, n_a2 = 0, n_b1 = 0, n_b2 = 0;
  for (int i = 0; i < groups.items(); ++i) {
    bool type_a = i < inst.type_a_count;
    if (groups.assignment[i] == 0)
      (type_a ? n_a1 : n_b1)++;
    else
      (type_a ? n_a2 : n_b2)++;
  }

  // For fixed (a1, a2), the best type-B fill maximizes beta1*b1 + beta2*b2
  // componentwise (both cells add multiples of b_row), so fill the
  // higher-beta cell first.
  const bool g1_first = inst.betas[0] >= inst.betas[1];
  TwoTypeCounts best;
  double best_observed = -1.0;
  for (int a1 = 0; a1 <= std::min({n_a1, caps[0], k}); ++a1) {
    for (int a2 = 0; a2 + a1 <= k && a2 <= std::min(n_a2, caps[1]); ++a2) {
      TwoTypeCounts c;
      c.a1 = a1;
      c.a2 = a2;
      int remaining = k - a1 - a2;
      int room1 = std::min(n_b1, caps[0] - a1);
      int room2 = std::min(n_b2, caps[1] - a2);
      if (g1_first) {
        c.b1 = std::min(room1, remaining);
        c.b2 = std::min(room2, remaining - c.b1);
      } else {
        c.b2 = std::min(room2, remaining);
        c.b1 = std::min(room1, remaining - c.b2);
      }
      double observed = two_type_observed_value(inst, c);
      if (observed > best_observed) {
        best_observed = observed;
        best = c;
      }
    }
  }
  return {best, two_type_latent_value(inst, best)};
}

}  // namespace biasmax
