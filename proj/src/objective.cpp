#include "biasmax/objective.hpp"

#include <algorithm>
#include <string>

#include "biasmax/errors.hpp"

namespace biasmax {

namespace {

// Sorted, validated copy of a subset.
std::vector<int> checked_sorted(std::span<const int> subset, int n) {
  std::vector<int> items(subset.begin(), subset.end());
  std::sort(items.begin(), items.end());
  for (std::size_t r = 0; r < items.size(); ++r) {
    if (items[r] < 0 || items[r] >= n)
      throw InputError("subset item " + std::to_string(items[r]) + " out of range [0," + std::to_string(n) + ")");
    if (r > 0 && items[r] == items[r - 1])
      throw InputError("subset contains duplicate item " + std::to_string(items[r]));
  }
  return items;
}

}  // namespace

ObjectiveSpec::ObjectiveSpec(std::vector<ConcaveCurve> curves_in, UtilityMatrix utilities_in)
    : curves(std::move(curves_in)), utilities(std::move(utilities_in)) {
  if (static_cast<int>(curves.size()) != utilities.attrs())
    throw InputError("objective: curve count " + std::to_string(curves.size()) +
                     " does not match attribute count " + std::to_string(utilities.attrs()));
}

double eval_objective(const ObjectiveSpec& spec, std::span<const int> subset) {
  const std::vector<int> items = checked_sorted(subset, spec.items());
  double total = 0.0;
  for (int j = 0; j < spec.attrs(); ++j) {
    double sum = 0.0;
    for (int i : items) sum += spec.utilities(i, j);
    total += spec.curves[j](sum);
  }
  return total;
}

double marginal_gain(const ObjectiveSpec& spec, std::span<const int> subset, int item) {
  for (int i : subset)
    if (i == item) throw InputError("marginal_gain: item already in subset");
  const std::vector<int> items = checked_sorted(subset, spec.items());
  if (item < 0 || item >= spec.items()) throw InputError("marginal_gain: item out of range");
  double gain = 0.0;
  for (int j = 0; j < spec.attrs(); ++j) {
    double sum = 0.0;
    for (int i : items) sum += spec.utilities(i, j);
    gain += spec.curves[j](sum + spec.utilities(item, j)) - spec.curves[j](sum);
  }
  return gain;
}

std::vector<double> decompose_by_category(const ObjectiveSpec& spec, const CategoryStructure& categories,
                                          std::span<const int> subset) {
  if (!categories.disjoint) throw SizeError("decompose_by_category: categories must be disjoint");
  if (categories.category_count != spec.attrs())
    throw InputError("decompose_by_category: category count must equal attribute count");
  const std::vector<int> items = checked_sorted(subset, spec.items());
  std::vector<double> parts(spec.attrs(), 0.0);
  for (int j = 0; j < spec.attrs(); ++j) {
    double sum = 0.0;
    // Both lists are sorted; walk the intersection in ascending item order.
    const auto& cj = categories.members[j];
    std::size_t a = 0, b = 0;
    while (a < items.size() && b < cj.size()) {
      if (items[a] < cj[b]) {
        ++a;
      } else if (items[a] > cj[b]) {
        ++b;
      } else {
        sum += spec.utilities(items[a], j);
        ++a;
        ++b;
      }
    }
    parts[j] = spec.curves[j](sum);
  }
  return parts;
}

ObjectiveAccumulator::ObjectiveAccumulator(const ObjectiveSpec& spec)
    : spec_(&spec), sums_(spec.attrs(), 0.0) {}

double ObjectiveAccumulator::gain_if_added(int item) const {
  double gain = 0.0;
  for (int j = 0; j < spec_->attrs(); ++j) {
    double w = spec_->utilities(item, j);
    if (w != 0.0) gain += spec_->curves[j](sums_[j] + w) - spec_->curves[j](sums_[j]);
  }
  return gain;
}

void ObjectiveAccumulator::add(int item) {
  value_ = 0.0;
  for (int j = 0; j < spec_->attrs(); ++j) {
    sums_[j] += spec_->utilities(item, j);
    value_ += spec_->curves[j](sums_[j]);
  }
}

std::vector<ConcaveCurve> curves_from_config(const KeyValueConfig& cfg) {
  std::vector<ConcaveCurve> out;
  for (int j = 1;; ++j) {
    std::string key = "curve." + std::to_string(j);
    if (!cfg.has(key)) break;
    out.push_back(ConcaveCurve::parse(cfg.get(key)));
  }
  if (out.empty()) throw ConfigError("no curve.<j> entries found in config");
  return out;
}

void curves_to_config(std::span<const ConcaveCurve> curves, KeyValueConfig& cfg) {
  for (std::size_t j = 0; j < curves.size(); ++j)
    cfg.set("curve." + std::to_string(j + 1), curves[j].to_string());
}

}  // namespace biasmax
