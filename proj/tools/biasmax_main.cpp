// Command-line front end: data generation, single selections, parameter
// sweeps, constraint-failure demos, and the MovieLens pipeline.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
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

namespace fs = std::filesystem;
using namespace biasmax;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSize = 3;

void write_selection_csv(const fs::path& path, const SelectionResult& sel,
                         const GroupStructure* groups, const CategoryStructure* categories) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write selection csv: " + path.string());
  std::vector<int> category_of;
  if (categories) {
    category_of.assign(1 + (sel.items.empty() ? 0 : *std::max_element(sel.items.begin(), sel.items.end())),
                       -1);
    for (int j = 0; j < categories->category_count; ++j)
      for (int i : categories->members[j])
        if (i < static_cast<int>(category_of.size()) && category_of[i] < 0) category_of[i] = j;
  }
  out << "item,category,group,step\n";
  for (std::size_t step = 0; step < sel.items.size(); ++step) {
    int i = sel.items[step];
    int cat = categories && i < static_cast<int>(category_of.size()) ? category_of[i] : -1;
    int grp = groups ? groups->assignment[i] : -1;
    out << (i + 1) << ',' << (cat < 0 ? 0 : cat + 1) << ',' << (grp < 0 ? 0 : grp + 1) << ','
        << (step + 1) << '\n';
  }
}

void print_summary(const SelectionResult& sel) {
  std::printf("selected = %zu\n", sel.items.size());
  std::printf("objective_value = %s\n", format_real(sel.objective_value).c_str());
  if (sel.observed_value) std::printf("observed_value = %s\n", format_real(*sel.observed_value).c_str());
  if (sel.latent_value) std::printf("latent_value = %s\n", format_real(*sel.latent_value).c_str());
  if (!sel.budgets.empty()) {
    std::string budgets;
    for (std::size_t j = 0; j < sel.budgets.per_category.size(); ++j)
      budgets += (j ? "," : "") + std::to_string(sel.budgets.per_category[j]);
    std::printf("budgets = %s\n", budgets.c_str());
  }
  if (!sel.group_counts.empty()) {
    std::string counts;
    for (std::size_t l = 0; l < sel.group_counts.size(); ++l)
      counts += (l ? "," : "") + std::to_string(sel.group_counts[l]);
    std::printf("group_counts = %s\n", counts.c_str());
  }
  std::string flags;
  if (sel.budget_unmet) flags += "budget_unmet";
  if (sel.seeds_overflow) flags += std::string(flags.empty() ? "" : "|") + "seeds_overflow";
  std::printf("flags = %s\n", flags.c_str());
}

int run_gen(const std::string& dataset, int n, int k, double delta, double beta, double frac,
            double eps, std::uint64_t seed, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  KeyValueConfig manifest;
  manifest.set("dataset", dataset);
  manifest.set("seed", std::to_string(seed));

  auto dump_synthetic = [&](const SyntheticData& data) {
    data.latent.save_csv(out_dir / "latent.csv");
    data.observed.save_csv(out_dir / "observed.csv");
    data.groups.save_csv(out_dir / "groups.csv");
    data.categories.save_csv(out_dir / "categories.csv");
    KeyValueConfig curves;
    curves_to_config(data.curves, curves);
    curves.save(out_dir / "curves.cfg");
  };

  if (dataset == "synthetic1") {
    SyntheticParams1 p;
    p.n = n;
    p.k = k;
    p.delta = delta;
    p.beta = beta;
    p.g1_fraction = frac;
    SyntheticData data = gen_synthetic1(p, seed);
    dump_synthetic(data);
    manifest.set("n", std::to_string(n));
    manifest.set("k", std::to_string(k));
    manifest.set("delta", format_real_exact(delta));
    manifest.set("beta", format_real_exact(beta));
    manifest.set("g1_fraction", format_real_exact(frac));
    manifest.set("lambda", format_real_exact(p.lambda));
    manifest.set("emerging_fraction", format_real_exact(p.emerging_fraction));
    manifest.set("p_not_heard", format_real_exact(p.p_not_heard));
    manifest.set("powerlaw", "pareto_type1_min1");
    manifest.set("bias_scope", "group2_attribute1_only");
  } else if (dataset == "synthetic2") {
    SyntheticData data = gen_synthetic2(n, delta, frac, beta, seed);
    dump_synthetic(data);
    manifest.set("n", std::to_string(n));
    manifest.set("k", std::to_string(k));
    manifest.set("delta", format_real_exact(delta));
    manifest.set("beta", format_real_exact(beta));
    manifest.set("g1_fraction", format_real_exact(frac));
    manifest.set("powerlaw", "pareto_type1_min1");
    manifest.set("bias_scope", "group2_all_attributes");
  } else if (dataset.size() == 9 && dataset.rfind("negative", 0) == 0) {
    char case_id = static_cast<char>(std::toupper(dataset.back()));
    NegativeInstance inst = gen_negative(case_id, eps, k, n);
    inst.build_latent().save_csv(out_dir / "latent.csv");
    KeyValueConfig curves;
    curves_to_config(inst.descriptor.curves, curves);
    curves.save(out_dir / "curves.cfg");
    manifest.set("case", std::string(1, case_id));
    manifest.set("eps", format_real_exact(eps));
    manifest.set("n", std::to_string(n));
    manifest.set("k", std::to_string(k));
    manifest.set("group_sizes", std::to_string(inst.group_sizes[0]) + "," + std::to_string(inst.group_sizes[1]));
    manifest.set("betas", format_real_exact(inst.descriptor.betas[0]) + "," +
                              format_real_exact(inst.descriptor.betas[1]));
    manifest.set("analytic_opt", format_real_exact(inst.analytic_opt));
  } else {
    throw InputError("unknown dataset '" + dataset +
                     "' (expected synthetic1, synthetic2, or negativeA..negativeD)");
  }
  manifest.save(out_dir / "manifest.cfg");
  std::printf("wrote %s\n", (out_dir / "manifest.cfg").string().c_str());
  return kExitOk;
}

int run_select(const fs::path& utilities_path, const fs::path& curves_path, int k,
               const std::string& algo_name_arg, const std::optional<fs::path>& groups_path,
               const std::optional<fs::path>& categories_path, const std::optional<fs::path>& fair_path,
               const std::optional<fs::path>& latent_path, const fs::path& out_path) {
  UtilityMatrix observed = UtilityMatrix::load_csv(utilities_path);
  std::vector<ConcaveCurve> curves = curves_from_config(KeyValueConfig::load(curves_path));
  ObjectiveSpec observed_spec(curves, observed);

  std::optional<GroupStructure> groups;
  if (groups_path) groups = GroupStructure::load_csv(*groups_path);
  std::optional<CategoryStructure> categories;
  if (categories_path) categories = CategoryStructure::load_csv(*categories_path, observed.attrs());

  Algo algo = algo_from_name(algo_name_arg);
  SelectionResult sel;
  switch (algo) {
    case Algo::kUncons:
      sel = greedy_cardinality(observed_spec, k);
      break;
    case Algo::kProportionalRepr: {
      if (!groups) throw ConfigError("proprepr needs --groups");
      FairnessConstraint constraint{std::vector<double>(groups->group_count, 0.0),
                                    std::vector<double>(groups->group_count, 1.0)};
      if (fair_path) {
        KeyValueConfig fair = KeyValueConfig::load(*fair_path);
        constraint.u = fair.get_reals("fair.u");
        constraint.v = fair.get_reals("fair.v");
      }
      sel = greedy_with_caps(observed_spec, k, *groups, fairness_caps(constraint, *groups, k));
      break;
    }
    case Algo::kAlgorithm1: {
      if (!groups) throw ConfigError("algorithm1 needs --groups");
      if (!categories) categories = categories_from_support(observed);
      sel = algorithm1(observed, k, *groups, *categories, curves);
      break;
    }
  }
  sel.observed_value = eval_objective(observed_spec, sel.items);
  if (latent_path) {
    UtilityMatrix latent = UtilityMatrix::load_csv(*latent_path);
    ObjectiveSpec latent_spec(curves, latent);
    sel.latent_value = eval_objective(latent_spec, sel.items);
    SelectionResult reference = greedy_cardinality(latent_spec, k);
    std::printf("nlu = %s\n",
                format_real(normalized_latent_utility(latent_spec, sel.items, reference.items)).c_str());
  }
  write_selection_csv(out_path, sel, groups ? &*groups : nullptr, categories ? &*categories : nullptr);
  print_summary(sel);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset selection under group-dependent bias: generators, maximizers, sweeps"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "Generate a synthetic or adversarial dataset as CSV");
  std::string gen_dataset = "synthetic2";
  int gen_n = 250, gen_k = 50;
  double gen_delta = 2.0, gen_beta = 0.01, gen_frac = 0.5, gen_eps = 0.1;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "data";
  gen->add_option("--dataset", gen_dataset, "synthetic1 | synthetic2 | negativeA..negativeD");
  gen->add_option("--n", gen_n, "item count");
  gen->add_option("--k", gen_k, "budget");
  gen->add_option("--delta", gen_delta, "power-law exponent");
  gen->add_option("--beta", gen_beta, "multiplicative bias for group 2");
  gen->add_option("--g1-frac", gen_frac, "reference-group fraction");
  gen->add_option("--eps", gen_eps, "epsilon for negative constructions");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out-dir", gen_out, "output directory");

  // --- select ---
  auto* select = app.add_subcommand("select", "Run one maximizer on CSV inputs");
  std::string sel_util, sel_curves, sel_algo = "algorithm1", sel_out = "selection.csv";
  std::string sel_groups, sel_categories, sel_fair, sel_latent;
  int sel_k = 10;
  select->add_option("--utilities", sel_util, "observed utility CSV")->required();
  select->add_option("--curves", sel_curves, "curve config")->required();
  select->add_option("--k", sel_k, "budget")->required();
  select->add_option("--algo", sel_algo, "uncons | proprepr | algorithm1");
  select->add_option("--groups", sel_groups, "groups CSV");
  select->add_option("--categories", sel_categories, "categories CSV");
  select->add_option("--fair-config", sel_fair, "fair.u / fair.v config for proprepr");
  select->add_option("--latent", sel_latent, "latent utility CSV (enables latent scoring)");
  select->add_option("--out", sel_out, "selection CSV path");

  // --- sweep ---
  auto* sweep = app.add_subcommand("sweep", "Run a sweep config and emit results CSV");
  std::string sweep_config, sweep_out = "results.csv", sweep_summary;
  sweep->add_option("--config", sweep_config, "sweep key-value config")->required();
  sweep->add_option("--out", sweep_out, "raw results CSV");
  sweep->add_option("--summary", sweep_summary, "per-cell summary CSV");

  // --- negres ---
  auto* negres = app.add_subcommand("negres", "Constraint-failure demo with the exact maximizer");
  std::string neg_case = "A", neg_out = "negres.csv", neg_u = "0,0", neg_v = "11,11";
  double neg_eps = 0.1;
  int neg_k = 200, neg_n = 4000, neg_trials = 100;
  std::uint64_t neg_seed = 0;
  negres->add_option("--case", neg_case, "A | B | C | D");
  negres->add_option("--eps", neg_eps, "epsilon");
  negres->add_option("--k", neg_k, "budget");
  negres->add_option("--n", neg_n, "item count");
  negres->add_option("--u", neg_u, "comma-separated u vector");
  negres->add_option("--v", neg_v, "comma-separated v vector");
  negres->add_option("--trials", neg_trials, "group resamplings");
  negres->add_option("--seed", neg_seed, "seed base");
  negres->add_option("--out", neg_out, "report CSV");

  // --- movielens ---
  auto* movielens = app.add_subcommand("movielens", "MovieLens ingestion and experiment");
  movielens->require_subcommand(1);
  auto* ingest = movielens->add_subcommand("ingest", "Join the MovieLens files into a movie table");
  std::string ml_ratings, ml_scores, ml_tags, ml_movies, ml_labels, ml_map;
  std::string ml_table_out = "movietable.csv", ml_users_out = "movieusers.csv", ml_ratio_out;
  double ml_threshold = 0.9;
  ingest->add_option("--ratings", ml_ratings)->required();
  ingest->add_option("--genome-scores", ml_scores)->required();
  ingest->add_option("--genome-tags", ml_tags)->required();
  ingest->add_option("--movies", ml_movies)->required();
  ingest->add_option("--labels", ml_labels, "movieId,gender,confidence CSV")->required();
  ingest->add_option("--threshold", ml_threshold, "confidence threshold");
  ingest->add_option("--genre-map", ml_map, "optional genre->tag override config");
  ingest->add_option("--table-out", ml_table_out);
  ingest->add_option("--users-out", ml_users_out);
  ingest->add_option("--ratio-out", ml_ratio_out, "per-genre relevance ratio CSV");

  auto* ml_run = movielens->add_subcommand("run", "Run the recommendation experiment");
  std::string run_table = "movietable.csv", run_users = "movieusers.csv", run_genres = "action,war";
  std::string run_ks = "50,100,150,200", run_out = "movielens_results.csv";
  int run_trials = 100, run_min_rated = 200;
  std::uint64_t run_seed = 0;
  ml_run->add_option("--table", run_table);
  ml_run->add_option("--users", run_users);
  ml_run->add_option("--genres", run_genres, "comma-separated stereotypical genres");
  ml_run->add_option("--k", run_ks, "comma-separated budgets");
  ml_run->add_option("--trials", run_trials);
  ml_run->add_option("--min-rated", run_min_rated, "user qualification threshold");
  ml_run->add_option("--seed", run_seed);
  ml_run->add_option("--out", run_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return run_gen(gen_dataset, gen_n, gen_k, gen_delta, gen_beta, gen_frac, gen_eps,
                     seed_base_from_env(gen_seed), gen_out);

    if (select->parsed()) {
      auto opt_path = [](const std::string& s) {
        return s.empty() ? std::optional<fs::path>{} : std::optional<fs::path>{s};
      };
      return run_select(sel_util, sel_curves, sel_k, sel_algo, opt_path(sel_groups),
                        opt_path(sel_categories), opt_path(sel_fair), opt_path(sel_latent), sel_out);
    }

    if (sweep->parsed()) {
      SweepConfig config = SweepConfig::from_config(KeyValueConfig::load(sweep_config));
      config.seed_base = seed_base_from_env(config.seed_base);
      std::vector<TrialRecord> records = run_sweep(config);
      write_records_csv(sweep_out, records);
      std::printf("wrote %zu records to %s\n", records.size(), sweep_out.c_str());
      if (!sweep_summary.empty()) {
        std::vector<CellSummary> cells = summarize(records);
        write_summary_csv(sweep_summary, cells);
        std::printf("wrote %zu cells to %s\n", cells.size(), sweep_summary.c_str());
      }
      return kExitOk;
    }

    if (negres->parsed()) {
      if (neg_case.size() != 1) throw InputError("--case expects one of A, B, C, D");
      FairnessConstraint constraint;
      for (const std::string& tok : split(neg_u, ','))
        constraint.u.push_back(parse_real(trim(tok), "--u"));
      for (const std::string& tok : split(neg_v, ','))
        constraint.v.push_back(parse_real(trim(tok), "--v"));
      NegativeDemoReport report =
          run_negative_demo(neg_case[0], neg_eps, neg_k, neg_n, constraint, neg_trials,
                            seed_base_from_env(neg_seed));
      report.write_csv(neg_out);
      std::printf("case %c constraint regime %c (%s)\n", report.case_id, report.constraint_regime,
                  report.certifying ? "certifying" : "non-certifying demonstration");
      std::printf("opt = %s, threshold = %s\n", format_real(report.opt).c_str(),
                  format_real(report.threshold).c_str());
      std::printf("freq[ratio <= threshold] = %s over %d trials\n",
                  format_real(report.freq_below_threshold).c_str(), neg_trials);
      return kExitOk;
    }

    if (movielens->parsed()) {
      if (ingest->parsed()) {
        MovieLensPaths paths{ml_ratings, ml_scores, ml_tags, ml_movies, ml_labels};
        std::optional<KeyValueConfig> overrides;
        if (!ml_map.empty()) overrides = KeyValueConfig::load(ml_map);
        MovieTable table = ingest_movielens(paths, ml_threshold, overrides ? &*overrides : nullptr);
        table.save(ml_table_out, ml_users_out);
        if (!ml_ratio_out.empty()) table.write_ratio_csv(ml_ratio_out);
        std::printf("table rows = %d, users = %d, matched genres = %zu\n", table.counts.table_rows,
                    table.counts.users_total, table.matched_genres.size());
        std::string b;
        for (const std::string& g : table.stereotypical_genres()) b += (b.empty() ? "" : ",") + g;
        std::printf("stereotypical genres = %s\n", b.c_str());
        return kExitOk;
      }
      if (ml_run->parsed()) {
        MovieTable table = MovieTable::load(run_table, run_users);
        std::vector<std::string> genres;
        for (const std::string& tok : split(run_genres, ',')) genres.push_back(trim(tok));
        std::vector<int> ks;
        for (const std::string& tok : split(run_ks, ','))
          ks.push_back(static_cast<int>(parse_int(trim(tok), "--k")));
        std::vector<TrialRecord> records = run_movielens_experiment(
            table, genres, ks, run_trials, seed_base_from_env(run_seed), run_min_rated);
        write_records_csv(run_out, records);
        std::printf("wrote %zu records to %s\n", records.size(), run_out.c_str());
        return kExitOk;
      }
    }
  } catch (const SizeError& e) {
    std::fprintf(stderr, "size/precondition error: %s\n", e.what());
    return kExitSize;
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitOk;
}
