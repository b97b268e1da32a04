#include "biasmax/bias.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "biasmax/csv.hpp"
#include "biasmax/errors.hpp"

namespace biasmax {

BiasFunction BiasFunction::identity() { return {Kind::kIdentity, 0.0}; }

BiasFunction BiasFunction::multiplicative(double beta) {
  if (!(beta > 0.0)) throw InputError("multiplicative bias: beta must be positive");
  return {Kind::kMultiplicative, beta};
}

BiasFunction BiasFunction::affine_skew(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InputError("affine_skew bias: x must be in [0,1]");
  return {Kind::kAffineSkew, x};
}

BiasFunction BiasFunction::tfidf_skew(double h) {
  if (!(h > 0.0)) throw InputError("tfidf_skew bias: h must be positive");
  return {Kind::kTfIdfSkew, h};
}

BiasFunction BiasFunction::monotone_table(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) throw InputError("table bias: need at least two breakpoints");
  if (points.front().first != 0.0) throw InputError("table bias: first breakpoint must be at x = 0");
  if (points.front().second < 0.0) throw InputError("table bias: value at 0 must be nonnegative");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].first > points[i - 1].first) || !(points[i].second > points[i - 1].second))
      throw InputError("table bias: breakpoints must be strictly increasing in x and y");
  }
  BiasFunction f(Kind::kTable, 0.0);
  f.points_ = std::move(points);
  return f;
}

BiasFunction BiasFunction::compose(BiasFunction outer, BiasFunction inner) {
  if (outer.is_identity()) return inner;
  if (inner.is_identity()) return outer;
  BiasFunction f(Kind::kComposed, 0.0);
  auto append = [&f](BiasFunction& g) {
    if (g.kind_ == Kind::kComposed)
      for (auto& part : g.chain_) f.chain_.push_back(std::move(part));
    else
      f.chain_.push_back(std::move(g));
  };
  append(outer);
  append(inner);
  return f;
}

double BiasFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::kIdentity: return x;
    case Kind::kMultiplicative: return param_ * x;
    case Kind::kAffineSkew: return x * (1.0 - param_) + param_;
    case Kind::kTfIdfSkew: return param_ * x;
    case Kind::kTable: {
      // Segment lookup with edge-slope extrapolation above the last point.
      auto it = std::upper_bound(points_.begin(), points_.end(), x,
                                 [](double v, const std::pair<double, double>& p) { return v < p.first; });
      std::size_t hi = static_cast<std::size_t>(it - points_.begin());
      if (hi == 0) return points_.front().second;  // x below 0 is not a valid domain point
      if (hi == points_.size()) hi = points_.size() - 1;
      const auto& [x0, y0] = points_[hi - 1];
      const auto& [x1, y1] = points_[hi];
      return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
    }
    case Kind::kComposed: {
      double v = x;
      for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) v = (*it)(v);
      return v;
    }
  }
  return x;
}

bool BiasFunction::is_identity() const { return kind_ == Kind::kIdentity; }

std::string BiasFunction::to_string() const {
  switch (kind_) {
    case Kind::kIdentity: return "identity";
    case Kind::kMultiplicative: return "multiplicative:" + format_real_exact(param_);
    case Kind::kAffineSkew: return "affineskew:" + format_real_exact(param_);
    case Kind::kTfIdfSkew: return "tfidfskew:" + format_real_exact(param_);
    case Kind::kTable: {
      std::string out = "table:";
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) out += ',';
        out += format_real_exact(points_[i].first) + ":" + format_real_exact(points_[i].second);
      }
      return out;
    }
    case Kind::kComposed: {
      std::string out = "compose(";
      for (std::size_t i = 0; i < chain_.size(); ++i) {
        if (i) out += " . ";
        out += chain_[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

BiasFunction BiasFunction::parse(std::string_view text) {
  std::string s(text);
  std::string name = s;
  std::string arg;
  if (std::size_t colon = s.find(':'); colon != std::string::npos) {
    name = s.substr(0, colon);
    arg = s.substr(colon + 1);
  }
  if (name == "identity") return identity();
  if (name == "multiplicative") return multiplicative(parse_real(arg, "bias multiplicative"));
  if (name == "affineskew") return affine_skew(parse_real(arg, "bias affineskew"));
  if (name == "tfidfskew") return tfidf_skew(parse_real(arg, "bias tfidfskew"));
  if (name == "table") {
    std::vector<std::pair<double, double>> pts;
    for (const std::string& pair : split(arg, ',')) {
      auto xy = split(pair, ':');
      if (xy.size() != 2) throw InputError("table bias: expected x:y pairs, got '" + pair + "'");
      pts.emplace_back(parse_real(trim(xy[0]), "table x"), parse_real(trim(xy[1]), "table y"));
    }
    return monotone_table(std::move(pts));
  }
  throw InputError("unknown bias function: '" + s + "'");
}

bool looks_increasing(const BiasFunction& f) {
  if (f(0.0) < 0.0) return false;
  double prev = f(0.0);
  for (int i = 1; i <= 64; ++i) {
    double x = 0.25 * i;  // grid over [0, 16]
    double y = f(x);
    if (y < prev) return false;
    prev = y;
  }
  return true;
}

const BiasFunction& BiasSpec::lookup(int group, int attr) const {
  if (auto it = by_group_attr.find({group, attr}); it != by_group_attr.end()) return it->second;
  if (auto it = by_group.find(group); it != by_group.end()) return it->second;
  throw ConfigError("no bias transform for group " + std::to_string(group + 1) + " (attribute " +
                    std::to_string(attr + 1) + ")");
}

BiasSpec BiasSpec::from_config(const KeyValueConfig& cfg) {
  BiasSpec spec;
  for (const std::string& key : cfg.keys_with_prefix("bias.")) {
    auto parts = split(key, '.');
    BiasFunction f = BiasFunction::parse(cfg.get(key));
    if (!looks_increasing(f)) throw ConfigError("bias transform for '" + key + "' is not increasing");
    if (parts.size() == 2) {
      spec.by_group.emplace(static_cast<int>(parse_int(parts[1], key)) - 1, std::move(f));
    } else if (parts.size() == 3) {
      int g = static_cast<int>(parse_int(parts[1], key)) - 1;
      int a = static_cast<int>(parse_int(parts[2], key)) - 1;
      spec.by_group_attr.emplace(std::make_pair(g, a), std::move(f));
    } else {
      throw ConfigError("bad bias key '" + key + "', expected bias.<group> or bias.<group>.<attr>");
    }
  }
  return spec;
}

void BiasSpec::to_config(KeyValueConfig& cfg) const {
  for (const auto& [g, f] : by_group) cfg.set("bias." + std::to_string(g + 1), f.to_string());
  for (const auto& [ga, f] : by_group_attr)
    cfg.set("bias." + std::to_string(ga.first + 1) + "." + std::to_string(ga.second + 1), f.to_string());
}

UtilityMatrix apply_bias(const UtilityMatrix& latent, const GroupStructure& groups, const BiasSpec& bias) {
  if (groups.items() != latent.items())
    throw InputError("apply_bias: group structure covers " + std::to_string(groups.items()) +
                     " items, matrix has " + std::to_string(latent.items()));
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(latent.items()) * latent.attrs());
  for (int i = 0; i < latent.items(); ++i) {
    int g = groups.assignment[i];
    for (int j = 0; j < latent.attrs(); ++j) data.push_back(bias.lookup(g, j)(latent(i, j)));
  }
  return UtilityMatrix(latent.items(), latent.attrs(), std::move(data));
}

std::pair<GroupStructure, BiasSpec> reduce_overlapping_groups(
    const std::vector<std::vector<int>>& memberships, const BiasSpec& raw_bias) {
  int raw_groups = 0;
  for (const auto& sets : memberships)
    for (int g : sets) raw_groups = std::max(raw_groups, g + 1);
  if (raw_groups > 20) throw SizeError("reduce_overlapping_groups: at most 20 raw groups supported");

  std::vector<std::vector<int>> signatures(memberships.size());
  std::set<std::vector<int>> distinct;
  for (std::size_t i = 0; i < memberships.size(); ++i) {
    std::vector<int> sig(memberships[i]);
    std::sort(sig.begin(), sig.end());
    sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
    distinct.insert(sig);
    signatures[i] = std::move(sig);
  }
  // Stable numbering: by (size, lexicographic), so the empty signature (no
  // raw group, identity transform) is intersection-group 1 when present.
  std::vector<std::vector<int>> ordered(distinct.begin(), distinct.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<std::vector<int>, int> id_of;
  BiasSpec reduced;
  for (std::size_t idx = 0; idx < ordered.size(); ++idx) {
    id_of[ordered[idx]] = static_cast<int>(idx);
    BiasFunction composed = BiasFunction::identity();
    // phi_{g1} ∘ phi_{g2} ∘ ... with g1 < g2 < ...: highest raw id applied first.
    for (auto it = ordered[idx].rbegin(); it != ordered[idx].rend(); ++it) {
      auto raw = raw_bias.by_group.find(*it);
      if (raw == raw_bias.by_group.end())
        throw ConfigError("reduce_overlapping_groups: no per-group transform for raw group " +
                          std::to_string(*it + 1));
      composed = BiasFunction::compose(raw->second, std::move(composed));
    }
    reduced.by_group.emplace(static_cast<int>(idx), std::move(composed));
  }
  std::vector<int> assignment(memberships.size());
  for (std::size_t i = 0; i < memberships.size(); ++i) assignment[i] = id_of[signatures[i]];
  GroupStructure groups = GroupStructure::from_assignment(std::move(assignment), static_cast<int>(ordered.size()));
  return {std::move(groups), std::move(reduced)};
}

}  // namespace biasmax
