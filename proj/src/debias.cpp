#include "biasmax/debias.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "biasmax/errors.hpp"
#include "biasmax/objective.hpp"

namespace biasmax {

namespace {

constexpr int kReferenceGroup = 0;

// Running rescaled sums over the reference group, mirroring
// ObjectiveAccumulator for the Part-1 greedy.
class RescaledAccumulator {
 public:
  RescaledAccumulator(const UtilityMatrix& observed, const GroupStructure& groups,
                      std::span<const ConcaveCurve> curves, double scale)
      : observed_(&observed), groups_(&groups), curves_(curves.begin(), curves.end()),
        scale_(scale), sums_(observed.attrs(), 0.0) {}

  double gain_if_added(int item) const {
    if (groups_->assignment[item] != kReferenceGroup) return 0.0;  // outside G_1 contributes nothing
    double gain = 0.0;
    for (int j = 0; j < observed_->attrs(); ++j) {
      double w = (*observed_)(item, j);
      if (w != 0.0) gain += curves_[j](sums_[j] + scale_ * w) - curves_[j](sums_[j]);
    }
    return gain;
  }

  void add(int item) {
    if (groups_->assignment[item] != kReferenceGroup) return;
    for (int j = 0; j < observed_->attrs(); ++j) sums_[j] += scale_ * (*observed_)(item, j);
  }

  double value() const {
    double v = 0.0;
    for (int j = 0; j < observed_->attrs(); ++j) v += curves_[j](sums_[j]);
    return v;
  }

 private:
  const UtilityMatrix* observed_;
  const GroupStructure* groups_;
  std::vector<ConcaveCurve> curves_;
  double scale_;
  std::vector<double> sums_;
};

}  // namespace

RescaledObjective::RescaledObjective(const UtilityMatrix& observed, const GroupStructure& groups,
                                     std::span<const ConcaveCurve> curves)
    : observed_(&observed), groups_(&groups), curves_(curves.begin(), curves.end()) {
  if (groups.items() != observed.items()) throw InputError("rescaled objective: group structure size mismatch");
  if (static_cast<int>(curves.size()) != observed.attrs())
    throw InputError("rescaled objective: curve count must match attribute count");
  if (groups.group_count < 1 || groups.sizes[kReferenceGroup] == 0)
    throw ConfigError("rescaled objective: reference group (group 1) is empty");
  scale_ = static_cast<double>(observed.items()) / groups.sizes[kReferenceGroup];
}

double RescaledObjective::eval(std::span<const int> subset) const {
  std::vector<int> items(subset.begin(), subset.end());
  std::sort(items.begin(), items.end());
  for (std::size_t r = 0; r < items.size(); ++r) {
    if (items[r] < 0 || items[r] >= observed_->items())
      throw InputError("rescaled objective: item out of range");
    if (r > 0 && items[r] == items[r - 1]) throw InputError("rescaled objective: duplicate item");
  }
  double total = 0.0;
  for (int j = 0; j < observed_->attrs(); ++j) {
    double sum = 0.0;
    for (int i : items)
      if (groups_->assignment[i] == kReferenceGroup) sum += (*observed_)(i, j);
    total += curves_[j](scale_ * sum);
  }
  return total;
}

RescaledObjective rescaled_objective(const UtilityMatrix& observed, const GroupStructure& groups,
                                     std::span<const ConcaveCurve> curves) {
  return RescaledObjective(observed, groups, curves);
}

std::vector<int> apportion_largest_remainder(int total, std::span<const long long> weights,
                                             std::vector<double>* remainders_out) {
  const int m = static_cast<int>(weights.size());
  std::vector<int> shares(m, 0);
  std::vector<double> remainders(m, 0.0);
  long long weight_sum = 0;
  for (long long w : weights) {
    if (w < 0) throw InputError("apportion: negative weight");
    weight_sum += w;
  }
  if (m == 0) return shares;

  if (weight_sum == 0) {
    // Degenerate: spread evenly, leftovers to the lowest indices.
    for (int j = 0; j < m; ++j) shares[j] = total / m + (j < total % m ? 1 : 0);
  } else {
    long long assigned = 0;
    for (int j = 0; j < m; ++j) {
      long long numer = static_cast<long long>(total) * weights[j];
      shares[j] = static_cast<int>(numer / weight_sum);
      remainders[j] = static_cast<double>(numer % weight_sum) / static_cast<double>(weight_sum);
      assigned += shares[j];
    }
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (remainders[a] != remainders[b]) return remainders[a] > remainders[b];
      return a < b;
    });
    for (int r = 0; assigned < total; ++r) {
      ++shares[order[r % m]];
      ++assigned;
    }
    // Floor of a nonnegative quota never overshoots, so assigned <= total held.

    // Every positive weight gets at least one unit while the total allows;
    // donate from the largest share (ties to the lowest index).
    int positive = 0;
    for (int j = 0; j < m; ++j) positive += weights[j] > 0 ? 1 : 0;
    if (total >= positive) {
      for (int j = 0; j < m; ++j) {
        if (weights[j] > 0 && shares[j] == 0) {
          int donor = -1;
          for (int d = 0; d < m; ++d)
            if (shares[d] > 1 && (donor == -1 || shares[d] > shares[donor])) donor = d;
          if (donor == -1) break;
          --shares[donor];
          ++shares[j];
        }
      }
    } else {
      // Not enough budget for one each: give the `total` largest weights one
      // unit apiece (ties to the lowest index).
      std::vector<int> by_weight(m);
      std::iota(by_weight.begin(), by_weight.end(), 0);
      std::sort(by_weight.begin(), by_weight.end(), [&](int a, int b) {
        if (weights[a] != weights[b]) return weights[a] > weights[b];
        return a < b;
      });
      shares.assign(m, 0);
      for (int r = 0; r < total; ++r) shares[by_weight[r]] = 1;
    }
  }
  if (remainders_out) *remainders_out = std::move(remainders);
  return shares;
}

Part1Result part1_budgets(const UtilityMatrix& observed, int k, const GroupStructure& groups,
                          const CategoryStructure& categories, std::span<const ConcaveCurve> curves) {
  if (k < 1) throw InputError("part1_budgets: k must be at least 1");
  // Category j is tied to attribute j throughout the two-part algorithm.
  if (categories.category_count != observed.attrs())
    throw InputError("part1_budgets: category count must equal attribute count");
  RescaledObjective rescaled(observed, groups, curves);
  const int n = observed.items();
  const long long g1 = groups.sizes[kReferenceGroup];
  const int target = static_cast<int>(static_cast<long long>(k) * g1 / n);
  if (target == 0)
    throw ConfigError("part1_budgets: floor(k*|G1|/n) = 0; k is too small for the reference-group fraction");

  Part1Result result;
  result.categories_overlap = !categories.disjoint;
  result.budgets.scale_factor = rescaled.scale();

  RescaledAccumulator acc(observed, groups, curves, rescaled.scale());
  std::vector<char> chosen(n, 0);

  // Seeding: per category, the top ceil(sqrt(k)) reference-group items by
  // singleton rescaled gain (F~({i}) - F~(empty)), ties to the lowest id.
  const int seed_quota = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(k))));
  RescaledAccumulator empty_acc(observed, groups, curves, rescaled.scale());
  for (int j = 0; j < categories.category_count; ++j) {
    std::vector<std::pair<double, int>> gains;
    for (int i : categories.members[j])
      if (groups.assignment[i] == kReferenceGroup) gains.emplace_back(empty_acc.gain_if_added(i), i);
    std::sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    const int take = std::min<int>(seed_quota, static_cast<int>(gains.size()));
    for (int r = 0; r < take; ++r) {
      int i = gains[r].second;
      if (chosen[i]) continue;  // overlapping categories may share seeds
      chosen[i] = 1;
      acc.add(i);
      result.reference_set.push_back(i);
    }
  }
  result.seeds_overflow = static_cast<int>(result.reference_set.size()) > target;

  // Greedy growth on the rescaled objective until the target size; gains of
  // zero still admit items so the size contract holds.
  while (static_cast<int>(result.reference_set.size()) < target) {
    int best = -1;
    double best_gain = 0.0;
    for (int i = 0; i < n; ++i) {
      if (chosen[i] || groups.assignment[i] != kReferenceGroup) continue;
      double gain = acc.gain_if_added(i);
      if (best == -1 || gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == -1) break;  // reference group exhausted
    chosen[best] = 1;
    acc.add(best);
    result.reference_set.push_back(best);
  }

  // Apportion the full budget k over per-category counts of S~.
  std::vector<long long> counts(categories.category_count, 0);
  std::vector<char> in_set(n, 0);
  for (int i : result.reference_set) in_set[i] = 1;
  for (int j = 0; j < categories.category_count; ++j)
    for (int i : categories.members[j]) counts[j] += in_set[i];
  result.budgets.source_counts.assign(counts.begin(), counts.end());
  result.budgets.per_category =
      apportion_largest_remainder(k, counts, &result.budgets.remainders);
  return result;
}

SelectionResult part2_select(const UtilityMatrix& observed, const BudgetVector& budgets,
                             const GroupStructure& groups, const CategoryStructure& categories,
                             std::span<const ConcaveCurve> curves) {
  if (groups.items() != observed.items()) throw InputError("part2_select: group structure size mismatch");
  if (static_cast<int>(budgets.per_category.size()) != categories.category_count)
    throw InputError("part2_select: budget entries must match category count");
  if (static_cast<int>(curves.size()) != observed.attrs())
    throw InputError("part2_select: curve count must match attribute count");
  if (categories.category_count != observed.attrs())
    throw InputError("part2_select: category count must equal attribute count");
  const int n = observed.items();
  const int p = groups.group_count;
  const int k = budgets.total();

  SelectionResult result;
  std::vector<char> chosen(n, 0);
  for (int j = 0; j < categories.category_count; ++j) {
    const int k_j = budgets.per_category[j];
    if (k_j <= 0) continue;

    // Proportional per-group caps floor(k * |G_l ∩ C_j| / n), relaxed in
    // largest-remainder order until the category budget is reachable.
    std::vector<long long> avail(p, 0);
    for (int i : categories.members[j]) ++avail[groups.assignment[i]];
    std::vector<int> caps(p, 0);
    std::vector<long long> rem(p, 0);
    for (int l = 0; l < p; ++l) {
      long long numer = static_cast<long long>(k) * avail[l];
      caps[l] = static_cast<int>(numer / n);
      rem[l] = numer % n;
    }
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (rem[a] != rem[b]) return rem[a] > rem[b];
      return a < b;
    });
    auto reachable = [&] {
      long long s = 0;
      for (int l = 0; l < p; ++l) s += std::min<long long>(caps[l], avail[l]);
      return s;
    };
    for (int idx = 0; reachable() < k_j;) {
      bool any_room = false;
      for (int l2 = 0; l2 < p; ++l2) any_room |= caps[l2] < avail[l2];
      if (!any_room) break;  // category smaller than its budget; shortfall flagged below
      int l = order[idx % p];
      ++idx;
      if (caps[l] < avail[l]) ++caps[l];
    }

    // Greedy by marginal gain of g_j; with one increasing curve this is the
    // observed-utility order, so a sorted scan is the same selection.
    std::vector<std::pair<double, int>> ranked;
    ranked.reserve(categories.members[j].size());
    for (int i : categories.members[j]) ranked.emplace_back(observed(i, j), i);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    std::vector<int> taken(p, 0);
    int picked = 0;
    for (const auto& [w, i] : ranked) {
      if (picked == k_j) break;
      if (chosen[i]) continue;  // already selected for an overlapping category
      int l = groups.assignment[i];
      if (taken[l] >= caps[l]) continue;
      chosen[i] = 1;
      ++taken[l];
      ++picked;
      result.items.push_back(i);
    }
  }

  result.group_counts.assign(p, 0);
  for (int i : result.items) ++result.group_counts[groups.assignment[i]];
  result.budgets = budgets;
  result.budget_unmet = static_cast<int>(result.items.size()) < k;
  ObjectiveSpec observed_spec(std::vector<ConcaveCurve>(curves.begin(), curves.end()), observed);
  result.objective_value = eval_objective(observed_spec, result.items);
  result.observed_value = result.objective_value;
  return result;
}

SelectionResult algorithm1(const UtilityMatrix& observed, int k, const GroupStructure& groups,
                           const CategoryStructure& categories, std::span<const ConcaveCurve> curves,
                           const UtilityMatrix* latent) {
  Part1Result part1 = part1_budgets(observed, k, groups, categories, curves);
  SelectionResult result = part2_select(observed, part1.budgets, groups, categories, curves);
  result.seeds_overflow = part1.seeds_overflow;
  if (latent) {
    ObjectiveSpec latent_spec(std::vector<ConcaveCurve>(curves.begin(), curves.end()), *latent);
    result.latent_value = eval_objective(latent_spec, result.items);
  }
  return result;
}

}  // namespace biasmax
