#include "biasmax/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "biasmax/errors.hpp"
#include "biasmax/rng.hpp"

namespace biasmax {

namespace {

// Stream tags for per-generator RNG splitting.
constexpr std::uint64_t kStreamGroups = 1;
constexpr std::uint64_t kStreamEmerging = 2;
constexpr std::uint64_t kStreamHeard = 3;
constexpr std::uint64_t kStreamPopularity = 4;
constexpr std::uint64_t kStreamCategories = 5;

int rounded_count(double fraction, int n) { return static_cast<int>(std::llround(fraction * n)); }

}  // namespace

double sample_pareto(Rng& rng, double delta) {
  // X = U^(-1/delta) with U in (0, 1]; flip the half-open interval so 0 is
  // impossible instead of 1.
  double u = 1.0 - rng.next_double();
  return std::pow(u, -1.0 / delta);
}

SyntheticData gen_synthetic1(const SyntheticParams1& params, std::uint64_t seed) {
  const int n = params.n;
  if (n < 1) throw InputError("gen_synthetic1: n must be positive");
  if (params.delta <= 0.0) throw InputError("gen_synthetic1: delta must be positive");
  if (params.emerging_fraction < 0.0 || params.emerging_fraction > 1.0 ||
      params.p_not_heard < 0.0 || params.p_not_heard > 1.0 ||
      params.beta < 0.0 || params.beta > 1.0 ||
      params.g1_fraction <= 0.0 || params.g1_fraction > 1.0)
    throw InputError("gen_synthetic1: probability-like parameter out of range");
  if (params.lambda <= 0.0) throw InputError("gen_synthetic1: lambda must be positive");

  Rng base(seed);

  // Emerging-artist subset of size floor(0.8 n), chosen uniformly.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng emerging_rng = base.split(kStreamEmerging);
  emerging_rng.shuffle(order);
  const int emerging_count = static_cast<int>(std::floor(params.emerging_fraction * n));
  std::vector<char> emerging(n, 0);
  for (int r = 0; r < emerging_count; ++r) emerging[order[r]] = 1;

  Rng heard_rng = base.split(kStreamHeard);
  std::vector<char> not_heard(n, 0);
  for (int i = 0; i < n; ++i) not_heard[i] = heard_rng.next_double() < params.p_not_heard ? 1 : 0;

  // Popularity: 1000 * Pareto(delta); emerging artists have no popular songs
  // yet, so their draw is conditioned on X <= 2 by rejection.
  Rng pop_rng = base.split(kStreamPopularity);
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(n) * 3);
  for (int i = 0; i < n; ++i) {
    double x = sample_pareto(pop_rng, params.delta);
    if (emerging[i])
      while (x > 2.0) x = sample_pareto(pop_rng, params.delta);
    data.push_back(1000.0 * x);
    data.push_back(emerging[i] ? 1.0 : 0.0);
    data.push_back(not_heard[i] ? 1.0 : 0.0);
  }

  SyntheticData out;
  out.latent = UtilityMatrix(n, 3, std::move(data));
  out.curves = {ConcaveCurve::linear(), ConcaveCurve::scaled_sqrt(params.lambda),
                ConcaveCurve::scaled_sqrt(params.lambda)};

  const int g1 = rounded_count(params.g1_fraction, n);
  if (g1 < 1 || g1 > n) throw InputError("gen_synthetic1: g1 fraction gives an empty group");
  std::array<int, 2> sizes{g1, n - g1};
  out.groups = sample_groups(n, sizes, derive_seed(seed, {kStreamGroups}));

  // Bias on the popularity attribute only: the platform already knows the
  // flag attributes. Falls under the per-attribute extension of the model.
  BiasSpec bias;
  bias.by_group.emplace(0, BiasFunction::identity());
  bias.by_group.emplace(1, BiasFunction::identity());
  bias.by_group_attr.emplace(std::make_pair(1, 0), BiasFunction::multiplicative(params.beta));
  out.observed = apply_bias(out.latent, out.groups, bias);

  out.categories = categories_from_support(out.latent);
  out.emerging = std::move(emerging);
  out.not_heard = std::move(not_heard);
  return out;
}

SyntheticData gen_synthetic2(int n, double delta, double g1_fraction, double beta, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_synthetic2: n must be positive");
  if (delta <= 0.0) throw InputError("gen_synthetic2: delta must be positive");
  if (g1_fraction <= 0.0 || g1_fraction > 1.0) throw InputError("gen_synthetic2: g1 fraction out of range");
  if (beta < 0.0 || beta > 1.0) throw InputError("gen_synthetic2: beta out of range");

  Rng base(seed);
  Rng cat_rng = base.split(kStreamCategories);
  Rng pop_rng = base.split(kStreamPopularity);

  std::vector<double> data(static_cast<std::size_t>(n) * 3, 0.0);
  for (int i = 0; i < n; ++i) {
    int c = static_cast<int>(cat_rng.next_below(3));
    data[static_cast<std::size_t>(i) * 3 + c] = 1000.0 * sample_pareto(pop_rng, delta);
  }

  SyntheticData out;
  out.latent = UtilityMatrix(n, 3, std::move(data));
  out.curves = {ConcaveCurve::log1p(), ConcaveCurve::log1p(), ConcaveCurve::log1p()};

  const int g1 = rounded_count(g1_fraction, n);
  if (g1 < 1 || g1 > n) throw InputError("gen_synthetic2: g1 fraction gives an empty group");
  std::array<int, 2> sizes{g1, n - g1};
  out.groups = sample_groups(n, sizes, derive_seed(seed, {kStreamGroups}));

  BiasSpec bias;
  bias.by_group.emplace(0, BiasFunction::identity());
  bias.by_group.emplace(1, BiasFunction::multiplicative(beta));
  out.observed = apply_bias(out.latent, out.groups, bias);

  out.categories = categories_from_support(out.latent);
  return out;
}

UtilityMatrix NegativeInstance::build_latent() const {
  const int m = static_cast<int>(descriptor.curves.size());
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i) {
    const auto& row = i < descriptor.type_a_count ? descriptor.a_row : descriptor.b_row;
    data.insert(data.end(), row.begin(), row.end());
  }
  return UtilityMatrix(n, m, std::move(data));
}

UtilityMatrix NegativeInstance::build_observed(const GroupStructure& groups) const {
  UtilityMatrix latent = build_latent();
  BiasSpec bias;
  bias.by_group.emplace(0, BiasFunction::multiplicative(descriptor.betas[0]));
  bias.by_group.emplace(1, BiasFunction::multiplicative(descriptor.betas[1]));
  UtilityMatrix observed = apply_bias(latent, groups, bias);
  if (case_id == 'A' || case_id == 'B') {
    // beta2 = eps^2 < eps keeps every group-1 item's observed popularity
    // above every group-2 item's; the maximizer relies on this ordering.
    double g1_min = 1e300, g2_max = -1.0;
    for (int i = 0; i < n; ++i) {
      if (groups.assignment[i] == 0)
        g1_min = std::min(g1_min, observed(i, 0));
      else
        g2_max = std::max(g2_max, observed(i, 0));
    }
    if (groups.sizes[0] > 0 && groups.sizes[1] > 0 && !(g1_min > g2_max))
      throw InputError("negative instance: observed group ordering violated");
  }
  return observed;
}

NegativeInstance gen_negative(char case_id, double eps, int k, int n) {
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("gen_negative: eps must be in (0,1)");
  if (k < 1) throw InputError("gen_negative: k must be at least 1");
  NegativeInstance inst;
  inst.case_id = case_id;
  inst.eps = eps;
  inst.k = k;
  inst.n = n;

  auto sizes_for = [&](double gamma1) {
    int g1 = rounded_count(gamma1, n);
    return std::array<int, 2>{g1, n - g1};
  };

  switch (case_id) {
    case 'A':
    case 'B': {
      // Linear popularity; the first k items are the valuable ones.
      inst.descriptor.curves = {ConcaveCurve::linear()};
      inst.descriptor.a_row = {1.0};
      inst.descriptor.b_row = {eps};
      inst.descriptor.type_a_count = k;
      inst.descriptor.betas = {1.0, eps * eps};
      inst.group_sizes = sizes_for(case_id == 'A' ? eps : 1.0 - eps);
      if (case_id == 'A' && inst.group_sizes[0] <= k)
        throw SizeError("gen_negative case A: requires round(eps*n) > k, i.e. n > k/eps = " +
                        std::to_string(static_cast<long long>(std::ceil(k / eps))));
      if (case_id == 'B' && inst.group_sizes[1] < k)
        throw SizeError("gen_negative case B: requires round(eps*n) >= k, i.e. n >= k/eps = " +
                        std::to_string(static_cast<long long>(std::ceil(k / eps))));
      if (n <= k) throw SizeError("gen_negative: requires n > k");
      inst.analytic_opt = static_cast<double>(k);
      inst.opt_lower_bound = static_cast<double>(k);
      inst.ratio_threshold = (case_id == 'A' ? 3.0 : 4.0) * eps;
      break;
    }
    case 'C':
    case 'D': {
      const bool c = case_id == 'C';
      inst.descriptor.curves = {ConcaveCurve::cube_root(),
                                ConcaveCurve::scaled_sqrt(c ? eps : eps * eps * eps)};
      inst.descriptor.a_row = {1.0, 0.0};
      inst.descriptor.b_row = {0.0, 1.0};
      inst.descriptor.type_a_count = c ? n / 2 : k;
      // The bias magnitude on group 2 is a free parameter; the construction's
      // concluding step substitutes beta = eps.
      inst.descriptor.betas = {1.0, eps};
      inst.group_sizes = sizes_for(c ? eps * eps * eps * eps : eps * eps * eps);
      if (n < 2 * k)
        throw SizeError("gen_negative case " + std::string(1, case_id) + ": requires n >= 2k = " +
                        std::to_string(2 * k));
      if (inst.group_sizes[0] < 1)
        throw SizeError("gen_negative case " + std::string(1, case_id) +
                        ": group 1 rounds to empty; needs n >= " +
                        std::to_string(static_cast<long long>(std::ceil(0.5 / (c ? std::pow(eps, 4) : std::pow(eps, 3))))));
      // Exact optimum over a type-A picks and k - a type-B picks.
      double best = 0.0;
      for (int a = 0; a <= std::min(k, inst.descriptor.type_a_count); ++a) {
        int b = std::min(k - a, n - inst.descriptor.type_a_count);
        TwoTypeCounts counts{a, 0, b, 0};
        best = std::max(best, two_type_latent_value(inst.descriptor, counts));
      }
      inst.analytic_opt = best;
      inst.opt_lower_bound = std::sqrt(static_cast<double>(k));
      inst.ratio_threshold = 3.0 * eps;
      break;
    }
    default:
      throw InputError("gen_negative: case must be one of A, B, C, D");
  }
  return inst;
}

char constraint_case(const FairnessConstraint& constraint, double eps) {
  if (constraint.u.empty() || constraint.v.empty())
    throw InputError("constraint_case: constraint has no entries");
  const double u1 = constraint.u[0];
  const double v1 = constraint.v[0];
  if (u1 >= eps) return 'D';
  if (u1 > 0.0)
    throw InputError("constraint_case: eps must be at most the smallest nonzero u entry");
  if (v1 > 1.0 / eps) return 'A';
  if (v1 < eps) return 'B';
  return 'C';
}

}  // namespace biasmax
