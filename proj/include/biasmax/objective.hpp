#pragma once

#include <span>
#include <vector>

#include "biasmax/concave_curve.hpp"
#include "biasmax/config.hpp"
#include "biasmax/groups.hpp"
#include "biasmax/utility_matrix.hpp"

namespace biasmax {

/// Concave-over-modular objective: F(S) = sum_j g_j(sum_{i in S} W_ij).
/// Immutable after construction, safe for concurrent evaluation.
struct ObjectiveSpec {
  std::vector<ConcaveCurve> curves;
  UtilityMatrix utilities;

  ObjectiveSpec(std::vector<ConcaveCurve> curves_in, UtilityMatrix utilities_in);

  int items() const { return utilities.items(); }
  int attrs() const { return utilities.attrs(); }
};

// F(S). Per-attribute sums accumulate in ascending item-id order so repeated
// evaluations are bit-identical. Throws InputError on out-of-range or
// duplicate items.
double eval_objective(const ObjectiveSpec& spec, std::span<const int> subset);

// F(S + i) - F(S); the item must not already be in the subset.
double marginal_gain(const ObjectiveSpec& spec, std::span<const int> subset, int item);

// Per-category contributions g_j(sum_{i in S∩C_j} W_ij); requires disjoint
// categories, and their sum equals F(S) when the categories match W's
// support.
std::vector<double> decompose_by_category(const ObjectiveSpec& spec, const CategoryStructure& categories,
                                          std::span<const int> subset);

/// Running per-attribute sums for greedy scans: gain_if_added is O(m).
class ObjectiveAccumulator {
 public:
  explicit ObjectiveAccumulator(const ObjectiveSpec& spec);

  double value() const { return value_; }
  double gain_if_added(int item) const;
  void add(int item);

 private:
  const ObjectiveSpec* spec_;
  std::vector<double> sums_;
  double value_ = 0.0;
};

// Curve config I/O: one `curve.<j> = <kind>[:<param>]` entry per attribute.
std::vector<ConcaveCurve> curves_from_config(const KeyValueConfig& cfg);
void curves_to_config(std::span<const ConcaveCurve> curves, KeyValueConfig& cfg);

}  // namespace biasmax
