// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// gating criterion fails. Tolerances and thresholds are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "biasmax/bias.hpp"
#include "biasmax/csv.hpp"
#include "biasmax/datagen.hpp"
#include "biasmax/debias.hpp"
#include "biasmax/errors.hpp"
#include "biasmax/harness.hpp"
#include "biasmax/maximizers.hpp"
#include "biasmax/movielens.hpp"
#include "biasmax/objective.hpp"
#include "biasmax/rng.hpp"

namespace fs = std::filesystem;
using namespace biasmax;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail, double seconds) {
  std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion, detail.c_str(),
              seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

void report_skip(int criterion, const std::string& detail) {
  std::printf("[SKIP] criterion %d (optional): %s\n", criterion, detail.c_str());
  std::fflush(stdout);
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::vector<ConcaveCurve> curve_families() {
  return {ConcaveCurve::linear(),           ConcaveCurve::sqrt(),
          ConcaveCurve::scaled_sqrt(0.05),  ConcaveCurve::log1p(),
          ConcaveCurve::weighted_log1p(2.5), ConcaveCurve::cube_root(),
          ConcaveCurve::neg_exp_coverage(0.7)};
}

UtilityMatrix random_matrix(Rng& rng, int n, int m, double lo, double hi, double zero_prob) {
  std::vector<double> data(static_cast<std::size_t>(n) * m);
  for (double& v : data)
    v = (zero_prob > 0.0 && rng.next_double() < zero_prob) ? 0.0 : lo + (hi - lo) * rng.next_double();
  return UtilityMatrix(n, m, std::move(data));
}

// ---- criterion 1: greedy guarantee against the exhaustive optimum ----
void criterion1() {
  Timer timer;
  const double bound = 1.0 - std::exp(-1.0);
  Rng rng(0xC1);
  int checked = 0;
  bool pass = true;
  double worst = 1.0;
  for (const ConcaveCurve& curve : curve_families()) {
    for (int trial = 0; trial < 200; ++trial) {
      int n = 8 + static_cast<int>(rng.next_below(7));       // <= 14
      int k = 2 + static_cast<int>(rng.next_below(4));       // <= 5
      UtilityMatrix w = random_matrix(rng, n, 2, 0.0, 4.0, 0.3);
      ObjectiveSpec spec({curve, curve}, w);

      auto [opt_set, opt_value] = exhaustive_opt(spec, k);
      SelectionResult greedy = greedy_cardinality(spec, k);
      if (opt_value > 0.0) worst = std::min(worst, greedy.objective_value / opt_value);
      pass = pass && greedy.objective_value >= bound * opt_value - 1e-12;

      int g1 = n / 2;
      GroupStructure groups = sample_groups(n, std::array<int, 2>{g1, n - g1}, rng.next_u64());
      std::array<int, 2> caps{1 + static_cast<int>(rng.next_below(k)),
                              1 + static_cast<int>(rng.next_below(k))};
      SelectionResult capped = greedy_with_caps(spec, k, groups, caps);
      auto feasible = [&](std::span<const int> subset) {
        int c0 = 0, c1 = 0;
        for (int i : subset) (groups.assignment[i] == 0 ? c0 : c1)++;
        return c0 <= caps[0] && c1 <= caps[1];
      };
      auto [copt_set, copt_value] = exhaustive_opt(spec, k, feasible);
      if (copt_value > 0.0) worst = std::min(worst, capped.objective_value / copt_value);
      pass = pass && capped.objective_value >= bound * copt_value - 1e-12;
      ++checked;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "greedy >= (1-1/e)*OPT on %d random instances across %zu curve families, worst ratio %.4f",
                checked, curve_families().size(), worst);
  report(1, pass, detail, timer.seconds());
}

// ---- criterion 2: monotonicity and submodularity sampling ----
void criterion2() {
  Timer timer;
  Rng rng(0xC2);
  bool pass = true;
  long long triples = 0;
  for (const ConcaveCurve& curve : curve_families()) {
    UtilityMatrix w = random_matrix(rng, 40, 2, 0.0, 3.0, 0.3);
    ObjectiveSpec spec({curve, curve}, w);
    for (int t = 0; t < 10000; ++t) {
      // Random chain S subset of T and an item outside T.
      int extra = static_cast<int>(rng.next_below(40));
      std::vector<int> big, small;
      for (int i = 0; i < 40; ++i) {
        if (i == extra) continue;
        double u = rng.next_double();
        if (u < 0.35) {
          big.push_back(i);
          if (u < 0.18) small.push_back(i);
        }
      }
      pass = pass && eval_objective(spec, small) <= eval_objective(spec, big) + 1e-9;
      pass = pass && marginal_gain(spec, small, extra) >= marginal_gain(spec, big, extra) - 1e-9;
      ++triples;
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof detail, "0 violations beyond 1e-9 over %lld sampled (S,T,i) triples",
                triples);
  report(2, pass, detail, timer.seconds());
}

// ---- criterion 3: Part-1 greedy equals the exhaustive Part-1 program ----
void criterion3() {
  Timer timer;
  Rng rng(0xC3);
  bool pass = true;
  int done = 0;
  double worst_gap = 0.0;
  while (done < 100) {
    int n = 14 + static_cast<int>(rng.next_below(7));  // 14..20
    int g1 = 11 + static_cast<int>(rng.next_below(6)); // 11..16
    if (g1 > std::min(n, 16)) continue;
    int m = 1 + static_cast<int>(rng.next_below(3));
    int k = m <= 1 ? 4 : 9;

    std::vector<double> data(static_cast<std::size_t>(n) * m, 0.0);
    for (int i = 0; i < n; ++i)
      data[static_cast<std::size_t>(i) * m + rng.next_below(m)] = 0.5 + 2.0 * rng.next_double();
    UtilityMatrix w(n, m, std::move(data));
    GroupStructure groups = sample_groups(n, std::array<int, 2>{g1, n - g1}, rng.next_u64());
    CategoryStructure cats = categories_from_support(w);
    std::vector<ConcaveCurve> curves;
    std::vector<ConcaveCurve> pool{ConcaveCurve::sqrt(), ConcaveCurve::log1p(), ConcaveCurve::cube_root()};
    for (int j = 0; j < m; ++j) curves.push_back(pool[j % 3]);

    // Feasibility: seeds fit inside the size target.
    const int target = k * g1 / n;
    const int quota = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(k))));
    int seed_total = 0;
    for (int j = 0; j < m; ++j) {
      int avail = 0;
      for (int i : cats.members[j]) avail += groups.assignment[i] == 0 ? 1 : 0;
      seed_total += std::min(quota, avail);
    }
    if (seed_total > target) continue;

    Part1Result part1 = part1_budgets(w, k, groups, cats, curves);
    RescaledObjective rescaled = rescaled_objective(w, groups, curves);
    double greedy_value = rescaled.eval(part1.reference_set);

    // Exhaustive maximization of the Part-1 program by bitmask over G1.
    std::vector<int> g1_items;
    for (int i = 0; i < n; ++i)
      if (groups.assignment[i] == 0) g1_items.push_back(i);
    std::vector<int> category_of(n, -1);
    for (int j = 0; j < m; ++j)
      for (int i : cats.members[j]) category_of[i] = j;
    std::vector<int> floors(m, 0);
    for (int j = 0; j < m; ++j) {
      int avail = 0;
      for (int i : g1_items) avail += category_of[i] == j ? 1 : 0;
      floors[j] = std::min(quota, avail);
    }
    const double scale = static_cast<double>(n) / g1;
    double best = -1.0;
    const int bits = static_cast<int>(g1_items.size());
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      if (__builtin_popcount(mask) > target) continue;
      std::vector<int> count(m, 0);
      std::vector<double> sums(m, 0.0);
      for (int b = 0; b < bits; ++b) {
        if (!(mask & (1u << b))) continue;
        int i = g1_items[b];
        ++count[category_of[i]];
        sums[category_of[i]] += w(i, category_of[i]);
      }
      bool ok = true;
      for (int j = 0; j < m; ++j) ok = ok && count[j] >= floors[j];
      if (!ok) continue;
      double value = 0.0;
      for (int j = 0; j < m; ++j) value += curves[j](scale * sums[j]);
      best = std::max(best, value);
    }
    worst_gap = std::max(worst_gap, std::abs(greedy_value - best));
    pass = pass && std::abs(greedy_value - best) <= 1e-9;
    ++done;
  }
  char detail[140];
  std::snprintf(detail, sizeof detail,
                "Part-1 greedy matches the exhaustive program on 100 disjoint instances, max |gap| %.2e",
                worst_gap);
  report(3, pass, detail, timer.seconds());
}

// ---- criterion 4: concentration of the rescaled utility ----
void criterion4() {
  Timer timer;
  Rng rng(0xC4);
  const int n = 2000;
  const int k = 100;
  const double tau = 0.5;
  // Entries strictly inside (tau, 1/tau).
  UtilityMatrix w = random_matrix(rng, n, 1, 0.51, 1.99, 0.0);
  if (!w.within_tau_range(tau)) {
    report(4, false, "matrix violates the declared tau range", timer.seconds());
    return;
  }
  const int g1 = n / 2;
  const double gamma = 0.5;

  // 20 fixed subsets with mass >= x*k, one curve kind per subset (cycled).
  std::vector<ConcaveCurve> kinds = curve_families();
  struct Fixed {
    std::vector<int> items;
    std::vector<char> member;
    double mass = 0.0;
    ConcaveCurve curve = ConcaveCurve::sqrt();
  };
  std::vector<Fixed> subsets;
  for (int s = 0; s < 20; ++s) {
    Fixed f;
    f.curve = kinds[s % kinds.size()];
    int size = 500 + 10 * s;
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    rng.shuffle(pool);
    pool.resize(size);
    f.items = pool;
    f.member.assign(n, 0);
    for (int i : pool) f.member[i] = 1;
    for (int i : pool) f.mass += w(i, 0);
    subsets.push_back(std::move(f));
  }

  const int resamples = 10000;
  std::vector<std::array<int, 2>> violations(subsets.size(), {0, 0});
  const double deltas[2] = {0.1, 0.05};
  // Validity: delta >= exp(-tau * gamma^6 * mass) must hold for the bound.
  for (const Fixed& f : subsets) {
    double floor_delta = std::exp(-tau * std::pow(gamma, 6.0) * f.mass);
    if (floor_delta > deltas[1]) {
      report(4, false, "subset mass too small for the stated delta range", timer.seconds());
      return;
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng sampler(0xC4C4);
  for (int r = 0; r < resamples; ++r) {
    // Partial Fisher-Yates: the first g1 entries form the reference group.
    for (int i = 0; i < g1; ++i) {
      int j = i + static_cast<int>(sampler.next_below(static_cast<std::uint64_t>(n - i)));
      std::swap(order[i], order[j]);
    }
    std::vector<char> in_g1(n, 0);
    for (int i = 0; i < g1; ++i) in_g1[order[i]] = 1;
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      const Fixed& f = subsets[s];
      double g1_mass = 0.0;
      for (int i : f.items)
        if (in_g1[i]) g1_mass += w(i, 0);
      double scaled = static_cast<double>(n) / g1 * g1_mass;
      double latent_value = f.curve(f.mass);
      double deviation = std::abs(f.curve(scaled) - latent_value);
      for (int d = 0; d < 2; ++d) {
        double bound = std::sqrt(std::log(1.0 / deltas[d]) / (tau * std::pow(gamma, 6.0) * f.mass)) *
                       latent_value;
        if (deviation > bound) ++violations[s][d];
      }
    }
  }
  bool pass = true;
  double worst_freq = 0.0;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (int d = 0; d < 2; ++d) {
      double freq = static_cast<double>(violations[s][d]) / resamples;
      if (d == 0) pass = pass && freq <= deltas[0] + 0.02;  // the gating tolerance
      worst_freq = std::max(worst_freq, freq);
    }
  }
  char detail[170];
  std::snprintf(detail, sizeof detail,
                "20 fixed subsets x %d resamplings: worst empirical violation frequency %.4f "
                "(allowed %.2f at delta 0.1)",
                resamples, worst_freq, 0.12);
  report(4, pass, detail, timer.seconds());
}

// ---- criterion 5: dataset-2 reproduction ----
std::vector<TrialRecord> dataset2_records(const std::vector<double>& betas) {
  SweepConfig config;
  config.dataset = "synthetic2";
  config.n = 250;
  config.k = 50;
  config.betas = betas;
  config.g1_fractions = {0.5};
  config.deltas = {2.0};
  config.trials = 50;
  config.seed_base = 20240501;
  config.algos = {Algo::kAlgorithm1};
  return run_sweep(config);
}

void criterion5() {
  Timer timer;
  const std::vector<double> betas{0.001, 0.01, 0.1, 0.5, 1.0};
  std::vector<TrialRecord> records = dataset2_records(betas);
  std::vector<CellSummary> cells = summarize(records);
  bool pass = cells.size() == betas.size();
  double worst = 1.0;
  for (const CellSummary& cell : cells) {
    worst = std::min(worst, cell.nlu_mean);
    pass = pass && cell.nlu_mean > 0.95;
  }
  for (const TrialRecord& r : records) pass = pass && r.flags.find("error") == std::string::npos;
  char detail[150];
  std::snprintf(detail, sizeof detail,
                "algorithm1 mean NLU > 0.95 on dataset 2 (n=250,k=50,frac=0.5,delta=2,50 trials); "
                "worst cell %.4f",
                worst);
  report(5, pass, detail, timer.seconds());
}

// ---- criterion 6: unconstrained greedy degradation somewhere in the grid ----
void criterion6() {
  Timer timer;
  SweepConfig config;
  config.dataset = "synthetic2";
  config.n = 250;
  config.k = 50;
  config.betas = {0.0001, 0.001, 0.05};
  config.g1_fractions = {0.25, 0.5};
  config.deltas = {1.0, 2.0, 3.0};
  config.trials = 1000;
  config.seed_base = 20240502;
  config.algos = {Algo::kUncons};
  std::vector<CellSummary> cells = summarize(run_sweep(config));
  double best_degradation = 1.0;
  for (const CellSummary& cell : cells) best_degradation = std::min(best_degradation, cell.nlu_mean);
  bool pass = best_degradation <= 0.90;
  char detail[150];
  std::snprintf(detail, sizeof detail,
                "uncons mean NLU reaches %.4f (<= 0.90 required) somewhere on the beta<=0.05 grid",
                best_degradation);
  report(6, pass, detail, timer.seconds());
}

// ---- criterion 7: constraint-failure demos ----
void criterion7() {
  Timer timer;
  bool pass = true;
  std::string detail;

  // Cases A and B at proven scale, each under a constraint from its own
  // regime (the proof's case split fixes the regime; see README).
  FairnessConstraint regime_a{{0.0, 0.0}, {11.0, 11.0}};   // v1 > 1/eps
  NegativeDemoReport a = run_negative_demo('A', 0.1, 200, 4000, regime_a, 100, 0xAC7);
  pass = pass && a.certifying && a.freq_below_threshold >= 0.9;
  detail += "A: freq[ratio<=0.3]=" + format_real(a.freq_below_threshold);

  FairnessConstraint regime_b{{0.0, 0.0}, {0.05, 11.0}};   // v1 < eps
  NegativeDemoReport b = run_negative_demo('B', 0.1, 200, 4000, regime_b, 100, 0xBC7);
  pass = pass && b.certifying && b.freq_below_threshold >= 0.9;
  detail += ", B: freq[ratio<=0.4]=" + format_real(b.freq_below_threshold);

  // Cases C and D: non-certifying desk-scale demonstrations (the asymptotic
  // minima are out of reach); the gate is exact agreement between the
  // two-type maximizer and the exhaustive oracle on every small instance.
  int cross_checked = 0;
  bool agree = true;
  for (char case_id : {'A', 'B', 'C', 'D'}) {
    for (double eps : {0.6, 0.75}) {
      for (int k : {4, 6}) {
        for (int n : {16, 20}) {
          NegativeInstance inst;
          try {
            inst = gen_negative(case_id, eps, k, n);
          } catch (const SizeError&) {
            continue;  // parameter combination below the case's minima
          }
          for (int trial = 0; trial < 5; ++trial) {
            GroupStructure groups = sample_groups(inst.n, inst.group_sizes,
                                                  derive_seed(0xCD7, {static_cast<std::uint64_t>(case_id),
                                                                      static_cast<std::uint64_t>(trial)}));
            for (const FairnessConstraint& constraint :
                 {FairnessConstraint{{0.0, 0.0}, {1.0, 1.0}},
                  FairnessConstraint{{0.3, 0.1}, {0.0, 0.5}}}) {
              std::vector<int> caps = fairness_caps(constraint, groups, k);
              auto [counts, latent] = two_type_exact_opt(inst.descriptor, groups, caps, k);
              double observed = two_type_observed_value(inst.descriptor, counts);

              ObjectiveSpec observed_spec(inst.descriptor.curves, inst.build_observed(groups));
              ObjectiveSpec latent_spec(inst.descriptor.curves, inst.build_latent());
              auto feasible = [&](std::span<const int> subset) {
                int c0 = 0, c1 = 0;
                for (int i : subset) (groups.assignment[i] == 0 ? c0 : c1)++;
                return c0 <= caps[0] && c1 <= caps[1];
              };
              auto [opt_set, opt_observed] = exhaustive_opt(observed_spec, k, feasible);
              agree = agree && std::abs(observed - opt_observed) <= 1e-9 * std::max(1.0, opt_observed);
              double latent_of_opt = eval_objective(latent_spec, opt_set);
              agree = agree && std::abs(latent - latent_of_opt) <= 1e-9 * std::max(1.0, latent_of_opt);
              ++cross_checked;
            }
          }
        }
      }
    }
  }
  pass = pass && agree && cross_checked > 0;
  detail += ", C/D gate: two-type maximizer == exhaustive on " + std::to_string(cross_checked) +
            " small instances";

  // Reduced-scale raw trajectories for C and D under regime-matched
  // constraints, explicitly non-certifying: the proofs need k beyond desk
  // scale, so only the trajectory is reported.
  FairnessConstraint proportional{{0.0, 0.0}, {1.0, 1.0}};        // case C regime for this eps
  FairnessConstraint regime_d{{0.6, 0.6}, {0.0, 0.0}};            // u1 >= eps
  NegativeDemoReport c = run_negative_demo('C', 0.55, 60, 1600, proportional, 50, 0xCC7);
  NegativeDemoReport d = run_negative_demo('D', 0.55, 60, 1600, regime_d, 50, 0xDC7);
  auto mean_ratio = [](const NegativeDemoReport& r) {
    double s = 0.0;
    for (const NegativeDemoTrial& t : r.trials) s += t.ratio;
    return s / r.trials.size();
  };
  std::printf("    note: non-certifying desk-scale trajectories at eps=0.55: case C mean "
              "F(S_UV)/OPT = %.3f, case D mean = %.3f (proof thresholds need k far beyond desk "
              "scale)\n",
              mean_ratio(c), mean_ratio(d));
  pass = pass && !c.certifying && !d.certifying;
  pass = pass && c.constraint_regime == 'C' && d.constraint_regime == 'D';

  report(7, pass, detail, timer.seconds());
}

// ---- criterion 8: determinism of the criterion-5 sweep ----
void criterion8() {
  Timer timer;
  const std::vector<double> betas{0.001, 0.01, 0.1, 0.5, 1.0};
  auto dir = fs::temp_directory_path();
  auto p1 = dir / "biasmax_acceptance_sweep1.csv";
  auto p2 = dir / "biasmax_acceptance_sweep2.csv";
  write_records_csv(p1, dataset2_records(betas));
  write_records_csv(p2, dataset2_records(betas));
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string first = slurp(p1), second = slurp(p2);
  bool pass = !first.empty() && first == second;
  fs::remove(p1);
  fs::remove(p2);
  char detail[120];
  std::snprintf(detail, sizeof detail, "repeated sweep emits byte-identical CSV (%zu bytes)",
                first.size());
  report(8, pass, detail, timer.seconds());
}

// ---- criterion 9: MovieLens pipeline on the bundled fixture ----
void criterion9() {
  Timer timer;
  fs::path dir = fs::path(BIASMAX_FIXTURE_DIR) / "movielens";
  MovieLensPaths paths{dir / "ratings.csv", dir / "genome-scores.csv", dir / "genome-tags.csv",
                       dir / "movies.csv", dir / "gender-labels.csv"};
  bool pass = true;
  std::string detail;
  try {
    MovieTable table = ingest_movielens(paths, 0.9);
    KeyValueConfig manifest = KeyValueConfig::load(dir / "manifest.cfg");
    pass = pass && table.counts.movies_rows == manifest.get_int("movies_rows");
    pass = pass && table.counts.ratings_rows == manifest.get_int("ratings_rows");
    pass = pass && table.counts.genome_rows == manifest.get_int("genome_rows");
    pass = pass && table.counts.label_rows == manifest.get_int("label_rows");
    pass = pass && table.counts.table_rows == manifest.get_int("table_rows");
    pass = pass && table.counts.users_total == manifest.get_int("users_total");
    detail += "fixture joins match the manifest";

    std::vector<TrialRecord> records =
        run_movielens_experiment(table, {"action", "war"}, {16}, 5, 0x31415, 30);
    double alg1 = 0.0, prop = 0.0;
    int alg1_count = 0, prop_count = 0;
    for (const TrialRecord& r : records) {
      pass = pass && r.flags.find("error") == std::string::npos;
      if (r.algo == Algo::kAlgorithm1) {
        alg1 += r.latent;
        ++alg1_count;
      }
      if (r.algo == Algo::kProportionalRepr) {
        prop += r.latent;
        ++prop_count;
      }
    }
    alg1 /= alg1_count;
    prop /= prop_count;
    pass = pass && alg1 >= prop;
    char buf[90];
    std::snprintf(buf, sizeof buf, "; algorithm1 latent %.4f >= proprepr %.4f on the planted fixture",
                  alg1, prop);
    detail += buf;
  } catch (const std::exception& e) {
    pass = false;
    detail += std::string("exception: ") + e.what();
  }
  report(9, pass, detail, timer.seconds());

  // Optional full-data check, run only when the official files are supplied.
  const char* ml_dir = std::getenv("BIASMAX_ML20M_DIR");
  const char* ml_labels = std::getenv("BIASMAX_ML_LABELS");
  if (!ml_dir || !ml_labels) {
    report_skip(9, "full MovieLens 20M Table-1 ratio check needs BIASMAX_ML20M_DIR and BIASMAX_ML_LABELS");
    return;
  }
  Timer full_timer;
  try {
    fs::path base(ml_dir);
    MovieLensPaths full{base / "ratings.csv", base / "genome-scores.csv", base / "genome-tags.csv",
                        base / "movies.csv", fs::path(ml_labels)};
    MovieTable table = ingest_movielens(full, 0.9);
    double action_ratio = -1.0;
    for (const GenreStat& s : table.genre_stats)
      if (s.genre == "action") action_ratio = s.ratio;
    bool ok = std::abs(action_ratio - 0.352) <= 0.05;
    char buf[120];
    std::snprintf(buf, sizeof buf, "full-data action relevance ratio %.4f (expected 0.352 +- 0.05)",
                  action_ratio);
    report(9, ok, buf, full_timer.seconds());
  } catch (const std::exception& e) {
    report(9, false, std::string("full-data check failed: ") + e.what(), full_timer.seconds());
  }
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
