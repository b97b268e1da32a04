#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "biasmax/config.hpp"
#include "biasmax/datagen.hpp"
#include "biasmax/groups.hpp"
#include "biasmax/objective.hpp"

namespace biasmax {

enum class Algo { kUncons, kProportionalRepr, kAlgorithm1 };

std::string algo_name(Algo a);
Algo algo_from_name(const std::string& name);

struct SweepConfig {
  std::string dataset = "synthetic2";  // synthetic1 | synthetic2
  int n = 250;
  int k = 50;
  std::vector<double> betas{0.01};
  std::vector<double> g1_fractions{0.5};
  std::vector<double> deltas{2.0};
  int trials = 1;
  std::vector<Algo> algos{Algo::kUncons, Algo::kProportionalRepr, Algo::kAlgorithm1};
  std::uint64_t seed_base = 0;
  // dataset-1 extras
  double lambda = 0.05;
  double emerging_fraction = 0.8;
  double p_not_heard = 0.9;

  static SweepConfig from_config(const KeyValueConfig& cfg);
};

struct TrialRecord {
  std::string dataset;
  double beta = 0.0;
  double frac_g1 = 0.0;
  double delta = 0.0;
  Algo algo = Algo::kUncons;
  std::uint64_t seed = 0;
  int k = 0;
  double latent = 0.0;
  double observed = 0.0;
  double nlu = 0.0;
  std::string flags;  // '|'-separated tokens, empty when clean
};

// F(subset) / F(reference) under the latent objective. The reference defaults
// to the unconstrained greedy on latent utilities (the no-bias selection).
double normalized_latent_utility(const ObjectiveSpec& latent_spec, std::span<const int> subset,
                                 std::span<const int> reference_subset);

// One record per (cell x algorithm x trial), in deterministic order. All
// algorithms inside a trial see the same generated data; only the scoring
// step reads latent values. Per-trial failures become flagged rows.
std::vector<TrialRecord> run_sweep(const SweepConfig& config);

// Fixed schema: dataset,beta,frac_g1,delta,algo,seed,k,latent,observed,nlu,flags
// with %.10g reals, so identical configs produce byte-identical files.
void write_records_csv(const std::filesystem::path& path, std::span<const TrialRecord> records);

struct CellSummary {
  std::string dataset;
  double beta = 0.0, frac_g1 = 0.0, delta = 0.0;
  Algo algo = Algo::kUncons;
  int trials = 0;
  double nlu_mean = 0.0;
  double nlu_sem = 0.0;  // sample stddev / sqrt(trials)
};

std::vector<CellSummary> summarize(std::span<const TrialRecord> records);
void write_summary_csv(const std::filesystem::path& path, std::span<const CellSummary> cells);

struct NegativeDemoTrial {
  int trial = 0;
  std::uint64_t seed = 0;
  TwoTypeCounts counts;
  double latent = 0.0;
  double ratio = 0.0;  // latent / OPT
};

struct NegativeDemoReport {
  char case_id = 'A';
  double eps = 0.0;
  int k = 0, n = 0;
  double opt = 0.0;
  double threshold = 0.0;        // proven ratio bound for the case
  bool certifying = false;       // false when the constraint regime differs or scale is reduced
  char constraint_regime = '?';
  std::vector<NegativeDemoTrial> trials;
  double freq_below_threshold = 0.0;

  void write_csv(const std::filesystem::path& path) const;
};

// Resamples groups `trials` times and computes the exact constrained
// observed-utility maximizer each time. The report is a certifying
// demonstration only when the supplied constraint falls in the case's regime
// (cases A and B at adequate scale); otherwise it records the raw ratio
// trajectory and says so.
NegativeDemoReport run_negative_demo(char case_id, double eps, int k, int n,
                                     const FairnessConstraint& constraint, int trials,
                                     std::uint64_t seed_base);

// Seed base override: BIASMAX_SEED wins over the configured value.
std::uint64_t seed_base_from_env(std::uint64_t configured);

}  // namespace biasmax
