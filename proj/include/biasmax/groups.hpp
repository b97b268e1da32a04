#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "biasmax/utility_matrix.hpp"

namespace biasmax {

/// Partition of items into disjoint groups 0..p-1. Group 0 is the reference
/// group wherever the debiasing algorithm's guarantees are invoked.
struct GroupStructure {
  int group_count = 0;
  std::vector<int> assignment;  // size n, values in [0, group_count)
  std::vector<int> sizes;       // per-group counts, sums to n

  int items() const { return static_cast<int>(assignment.size()); }
  double gamma(int group) const { return static_cast<double>(sizes[group]) / items(); }
  double gamma_min() const;
  std::vector<std::vector<int>> members() const;

  static GroupStructure from_assignment(std::vector<int> assignment, int group_count);

  static GroupStructure load_csv(const std::filesystem::path& path);  // item,group (both 1-based)
  void save_csv(const std::filesystem::path& path) const;
};

/// Category memberships C_1..C_m; `disjoint` marks pairwise-empty
/// intersections. When derived from a matrix, C_j is the positive support of
/// attribute j.
struct CategoryStructure {
  int category_count = 0;
  std::vector<std::vector<int>> members;  // sorted item ids per category
  bool disjoint = false;

  // Categories containing each item (sorted); items may appear in none.
  std::vector<std::vector<int>> memberships(int item_count) const;

  static CategoryStructure from_members(std::vector<std::vector<int>> members);

  static CategoryStructure load_csv(const std::filesystem::path& path, int category_count);  // item,category
  void save_csv(const std::filesystem::path& path) const;
};

/// Per-group upper-bound family: |S ∩ G_l| <= (u_l + v_l * gamma_l) * k.
/// u = 1/p, v = 0 is equal representation; u = 0, v = 1 proportional.
struct FairnessConstraint {
  std::vector<double> u;
  std::vector<double> v;
};

// Uniform random partition with the given sizes: group 0 gets `sizes[0]`
// items sampled without replacement, group 1 the next batch, and so on.
GroupStructure sample_groups(int n, std::span<const int> sizes, std::uint64_t seed);

std::vector<int> fairness_caps(const FairnessConstraint& constraint, const GroupStructure& groups, int k);

CategoryStructure categories_from_support(const UtilityMatrix& latent);

}  // namespace biasmax
