#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biasmax/config.hpp"
#include "biasmax/groups.hpp"
#include "biasmax/utility_matrix.hpp"

namespace biasmax {

/// Increasing scalar transform applied to latent utilities of one group
/// (optionally one group-attribute pair).
class BiasFunction {
 public:
  enum class Kind { kIdentity, kMultiplicative, kAffineSkew, kTfIdfSkew, kTable, kComposed };

  static BiasFunction identity();
  static BiasFunction multiplicative(double beta);  // beta > 0
  // z -> z*(1-x) + x: an x-fraction of raters pinning scores at the top of a
  // [0,1] scale.
  static BiasFunction affine_skew(double x);        // x in [0,1]
  static BiasFunction tfidf_skew(double h);         // h > 0, multiplicative document-frequency penalty
  // Piecewise-linear table; breakpoints must be strictly increasing in both
  // coordinates, start at x = 0 with y >= 0, and extrapolate with the edge
  // slopes beyond the last breakpoint.
  static BiasFunction monotone_table(std::vector<std::pair<double, double>> points);
  // outer(inner(x)).
  static BiasFunction compose(BiasFunction outer, BiasFunction inner);

  double operator()(double x) const;
  Kind kind() const { return kind_; }
  bool is_identity() const;

  std::string to_string() const;  // e.g. "multiplicative:0.01", "table:0:0,1:0.5"
  static BiasFunction parse(std::string_view text);

 private:
  BiasFunction(Kind kind, double param) : kind_(kind), param_(param) {}
  Kind kind_;
  double param_ = 0.0;
  std::vector<std::pair<double, double>> points_;
  std::vector<BiasFunction> chain_;  // composed: chain_[0](chain_[1](...(x)))
};

// Sanity check used at config boundaries: weakly increasing on a sampled grid
// and nonnegative at 0.
bool looks_increasing(const BiasFunction& f);

/// Transform table: per-group defaults plus per-(group, attribute) overrides
/// for the extended model.
struct BiasSpec {
  std::map<int, BiasFunction> by_group;
  std::map<std::pair<int, int>, BiasFunction> by_group_attr;

  // Override first, then the group default; ConfigError when neither exists.
  const BiasFunction& lookup(int group, int attr) const;

  static BiasSpec from_config(const KeyValueConfig& cfg);  // bias.<g> / bias.<g>.<attr> keys (1-based)
  void to_config(KeyValueConfig& cfg) const;
};

// Observed matrix: W_hat[i][j] = phi(W[i][j]) with phi chosen by item i's
// group (and attribute j in the extended model). The input is not modified.
UtilityMatrix apply_bias(const UtilityMatrix& latent, const GroupStructure& groups, const BiasSpec& bias);

// Overlapping-group reduction: items sharing a membership signature form one
// disjoint group whose transform is the composition of the raw transforms
// (highest raw group id applied first). Signatures are numbered by
// (size, lexicographic) order, so items in no raw group come first with the
// identity transform.
std::pair<GroupStructure, BiasSpec> reduce_overlapping_groups(
    const std::vector<std::vector<int>>& memberships, const BiasSpec& raw_bias);

}  // namespace biasmax
