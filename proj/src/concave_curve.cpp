#include "biasmax/concave_curve.hpp"

#include <cmath>

#include "biasmax/csv.hpp"
#include "biasmax/errors.hpp"

namespace biasmax {

ConcaveCurve ConcaveCurve::linear() { return {CurveKind::kLinear, 0.0}; }
ConcaveCurve ConcaveCurve::sqrt() { return {CurveKind::kSqrt, 0.0}; }

ConcaveCurve ConcaveCurve::scaled_sqrt(double lambda) {
  if (!(lambda > 0.0)) throw InputError("scaled_sqrt: lambda must be positive");
  return {CurveKind::kScaledSqrt, lambda};
}

ConcaveCurve ConcaveCurve::log1p() { return {CurveKind::kLog1p, 0.0}; }

ConcaveCurve ConcaveCurve::weighted_log1p(double weight) {
  if (!(weight > 0.0)) throw InputError("weighted_log1p: weight must be positive");
  return {CurveKind::kWeightedLog1p, weight};
}

ConcaveCurve ConcaveCurve::cube_root() { return {CurveKind::kCubeRoot, 0.0}; }

ConcaveCurve ConcaveCurve::neg_exp_coverage(double prior) {
  if (!(prior >= 0.0 && prior <= 1.0)) throw InputError("neg_exp_coverage: prior must be in [0,1]");
  return {CurveKind::kNegExpCoverage, prior};
}

double ConcaveCurve::operator()(double x) const {
  switch (kind_) {
    case CurveKind::kLinear: return x;
    case CurveKind::kSqrt: return std::sqrt(x);
    case CurveKind::kScaledSqrt: return param_ * std::sqrt(x);
    case CurveKind::kLog1p: return std::log1p(x);
    case CurveKind::kWeightedLog1p: return param_ * std::log1p(x);
    case CurveKind::kCubeRoot: return std::cbrt(x);
    case CurveKind::kNegExpCoverage: return param_ * -std::expm1(-x);
  }
  return 0.0;
}

std::string ConcaveCurve::to_string() const {
  switch (kind_) {
    case CurveKind::kLinear: return "linear";
    case CurveKind::kSqrt: return "sqrt";
    case CurveKind::kScaledSqrt: return "scaledsqrt:" + format_real_exact(param_);
    case CurveKind::kLog1p: return "log1p";
    case CurveKind::kWeightedLog1p: return "weightedlog1p:" + format_real_exact(param_);
    case CurveKind::kCubeRoot: return "cuberoot";
    case CurveKind::kNegExpCoverage: return "negexpcoverage:" + format_real_exact(param_);
  }
  return "?";
}

ConcaveCurve ConcaveCurve::parse(std::string_view text) {
  std::string name(text);
  double param = 0.0;
  bool has_param = false;
  if (std::size_t colon = name.find(':'); colon != std::string::npos) {
    param = parse_real(name.substr(colon + 1), "curve parameter");
    has_param = true;
    name = name.substr(0, colon);
  }
  if (name == "linear") return linear();
  if (name == "sqrt") return sqrt();
  if (name == "log1p") return log1p();
  if (name == "cuberoot") return cube_root();
  if (name == "scaledsqrt") {
    if (!has_param) throw InputError("curve scaledsqrt needs a parameter");
    return scaled_sqrt(param);
  }
  if (name == "weightedlog1p") {
    if (!has_param) throw InputError("curve weightedlog1p needs a parameter");
    return weighted_log1p(param);
  }
  if (name == "negexpcoverage") {
    if (!has_param) throw InputError("curve negexpcoverage needs a parameter");
    return neg_exp_coverage(param);
  }
  throw InputError("unknown curve kind: '" + std::string(text) + "'");
}

double coverage_weight(double probability) {
  if (!(probability >= 0.0 && probability <= 1.0))
    throw InputError("coverage_weight: probability must be in [0,1]");
  constexpr double kClamp = 1e-12;
  double miss = 1.0 - probability;
  if (miss < kClamp) miss = kClamp;
  return std::log(1.0 / miss);
}

}  // namespace biasmax
