#include "biasmax/utility_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include "biasmax/csv.hpp"
#include "biasmax/errors.hpp"

namespace biasmax {

UtilityMatrix::UtilityMatrix(int items, int attrs, std::vector<double> row_major)
    : n_(items), m_(attrs), data_(std::move(row_major)) {
  if (n_ < 0 || m_ < 0) throw InputError("utility matrix: negative dimensions");
  if (data_.size() != static_cast<std::size_t>(n_) * m_)
    throw InputError("utility matrix: data size does not match dimensions");
  for (double v : data_) {
    if (!std::isfinite(v)) throw InputError("utility matrix: non-finite entry");
    if (v < 0.0) throw InputError("utility matrix: negative entry");
  }
}

bool UtilityMatrix::within_tau_range(double tau) const {
  if (tau <= 0.0) throw InputError("tau must be positive");
  const double hi = 1.0 / tau;
  for (double v : data_) {
    if (v == 0.0) continue;
    if (v <= tau || v >= hi) return false;
  }
  return true;
}

double UtilityMatrix::tightest_tau() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double v : data_) {
    if (v == 0.0) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == 0.0) return 0.0;
  return std::min(lo, 1.0 / hi);
}

UtilityMatrix UtilityMatrix::load_csv(const std::filesystem::path& path) {
  CsvReader reader(path);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw InputError("utility csv is empty: " + path.string());
  if (fields.empty() || fields[0] != "item")
    throw InputError("utility csv: bad header '" + reader.header_line() + "', expected item,a1,...");
  const int m = static_cast<int>(fields.size()) - 1;
  for (int j = 0; j < m; ++j) {
    if (fields[j + 1] != "a" + std::to_string(j + 1))
      throw InputError("utility csv: bad header '" + reader.header_line() + "', expected item,a1,...");
  }
  std::vector<double> data;
  long long expected_item = 1;
  while (reader.next(fields)) {
    if (static_cast<int>(fields.size()) != m + 1)
      throw InputError("utility csv: row with wrong field count in " + path.string());
    long long item = parse_int(fields[0], "utility csv item column");
    if (item != expected_item)
      throw InputError("utility csv: items must be contiguous starting at 1, got " + fields[0]);
    ++expected_item;
    for (int j = 0; j < m; ++j) data.push_back(parse_real(fields[j + 1], "utility csv entry"));
  }
  const int n = static_cast<int>(expected_item - 1);
  return UtilityMatrix(n, m, std::move(data));
}

void UtilityMatrix::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write utility csv: " + path.string());
  out << "item";
  for (int j = 0; j < m_; ++j) out << ",a" << (j + 1);
  out << '\n';
  for (int i = 0; i < n_; ++i) {
    out << (i + 1);
    for (int j = 0; j < m_; ++j) out << ',' << format_real_exact((*this)(i, j));
    out << '\n';
  }
}

}  // namespace biasmax
