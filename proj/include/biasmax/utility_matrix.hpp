#pragma once

#include <filesystem>
#include <vector>

namespace biasmax {

/// Dense n x m matrix of item-attribute utilities. Entries are validated to
/// be finite and nonnegative at construction; instances are immutable after
/// that, so concurrent reads are safe.
class UtilityMatrix {
 public:
  UtilityMatrix() = default;
  UtilityMatrix(int items, int attrs, std::vector<double> row_major);

  int items() const { return n_; }
  int attrs() const { return m_; }

  double operator()(int item, int attr) const { return data_[static_cast<std::size_t>(item) * m_ + attr]; }

  // True when every nonzero entry lies strictly inside (tau, 1/tau).
  bool within_tau_range(double tau) const;

  // Smallest tau-style bound the matrix satisfies: max(min_nonzero^-1 scaled)...
  // Returned value t is such that every nonzero entry is in [1/t_hi ...]; used
  // for reporting, 0 when the matrix has no nonzero entries.
  double tightest_tau() const;

  const std::vector<double>& data() const { return data_; }

  // CSV with header `item,a1,...,am`, items written 1-based in row order.
  static UtilityMatrix load_csv(const std::filesystem::path& path);
  void save_csv(const std::filesystem::path& path) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<double> data_;
};

}  // namespace biasmax
