#pragma once

#include <string>
#include <string_view>

namespace biasmax {

enum class CurveKind {
  kLinear,
  kSqrt,
  kScaledSqrt,       // lambda * sqrt(x)
  kLog1p,            // ln(1 + x)
  kWeightedLog1p,    // w * ln(1 + x)
  kCubeRoot,
  kNegExpCoverage,   // prior * (1 - exp(-x))
};

/// One increasing concave scalar curve with g(0) = 0. A list of m curves plus
/// a utility matrix defines an objective (see objective.hpp).
class ConcaveCurve {
 public:
  static ConcaveCurve linear();
  static ConcaveCurve sqrt();
  static ConcaveCurve scaled_sqrt(double lambda);        // lambda > 0
  static ConcaveCurve log1p();
  static ConcaveCurve weighted_log1p(double weight);     // weight > 0
  static ConcaveCurve cube_root();
  static ConcaveCurve neg_exp_coverage(double prior);    // prior in [0, 1]

  double operator()(double x) const;

  CurveKind kind() const { return kind_; }
  double param() const { return param_; }

  // Text form used in curve configs, e.g. "scaledsqrt:0.05".
  std::string to_string() const;
  static ConcaveCurve parse(std::string_view text);

 private:
  ConcaveCurve(CurveKind kind, double param) : kind_(kind), param_(param) {}
  CurveKind kind_;
  double param_;
};

// Weight for the coverage objective: an item satisfying with probability p
// contributes ln(1/(1-p)). Probabilities at (or within 1e-12 of) 1 are
// clamped to keep the weight finite.
double coverage_weight(double probability);

}  // namespace biasmax
