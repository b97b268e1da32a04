#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "biasmax/bias.hpp"
#include "biasmax/concave_curve.hpp"
#include "biasmax/groups.hpp"
#include "biasmax/maximizers.hpp"
#include "biasmax/utility_matrix.hpp"

namespace biasmax {

// Pareto Type I with minimum 1: density proportional to x^-(delta+1) on
// [1, inf). Inverse-CDF sampling, so one uniform draw per sample.
double sample_pareto(class Rng& rng, double delta);

/// Playlist-style dataset: popularity, emerging-artist flag, and not-heard
/// flag per song; the objective is linear popularity plus lambda * sqrt of
/// each flag column. Bias hits the popularity attribute of group 2 only.
struct SyntheticParams1 {
  int n = 250;
  int k = 50;
  double lambda = 0.05;
  double emerging_fraction = 0.8;
  double p_not_heard = 0.9;
  double delta = 2.0;        // power-law exponent
  double beta = 0.01;        // multiplicative bias on attribute 1 of group 2
  double g1_fraction = 0.5;  // |G_1| / n
};

struct SyntheticData {
  UtilityMatrix latent;
  UtilityMatrix observed;
  GroupStructure groups;
  CategoryStructure categories;  // from latent support
  std::vector<ConcaveCurve> curves;
  std::vector<char> emerging;    // dataset 1 labels; empty for dataset 2
  std::vector<char> not_heard;
};

SyntheticData gen_synthetic1(const SyntheticParams1& params, std::uint64_t seed);

/// Genre-style dataset: each item lands in one of three categories uniformly,
/// with a Pareto popularity on that category's attribute; log(1+x) curves.
/// Group 2's utilities are observed scaled by beta on all attributes.
SyntheticData gen_synthetic2(int n, double delta, double g1_fraction, double beta, std::uint64_t seed);

/// One of the four adversarial constructions showing that fixed-cap
/// constraints can lose almost all latent utility. Groups are sampled per
/// trial; the instance itself is deterministic in (case, eps, k, n).
struct NegativeInstance {
  char case_id = 'A';
  double eps = 0.0;
  int k = 0;
  int n = 0;
  TwoTypeInstance descriptor;
  std::array<int, 2> group_sizes{0, 0};
  double analytic_opt = 0.0;        // exact unconstrained latent optimum
  double opt_lower_bound = 0.0;     // the bound the construction certifies (k or sqrt(k))
  double ratio_threshold = 0.0;     // proven F(S_UV)/OPT bound: 3*eps or 4*eps

  UtilityMatrix build_latent() const;
  UtilityMatrix build_observed(const GroupStructure& groups) const;
};

NegativeInstance gen_negative(char case_id, double eps, int k, int n);

// The case regime a (u, v) constraint falls into for a two-group instance,
// following the case split on (u_1, v_1).
char constraint_case(const FairnessConstraint& constraint, double eps);

}  // namespace biasmax
