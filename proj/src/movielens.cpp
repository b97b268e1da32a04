#include "biasmax/movielens.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "biasmax/csv.hpp"
#include "biasmax/debias.hpp"
#include "biasmax/errors.hpp"
#include "biasmax/maximizers.hpp"
#include "biasmax/rng.hpp"

namespace biasmax {

namespace {

constexpr std::uint64_t kStreamMovieLens = 103;

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void require_header(const CsvReader& reader, const std::vector<std::string>& fields,
                    const std::vector<std::string>& expected, const std::string& what) {
  bool ok = fields.size() >= expected.size();
  for (std::size_t i = 0; ok && i < expected.size(); ++i) ok = lower(fields[i]) == expected[i];
  if (!ok)
    throw InputError(what + ": unexpected header '" + reader.header_line() + "'");
}

}  // namespace

std::vector<std::string> MovieTable::stereotypical_genres(double min_ratio) const {
  std::vector<std::string> out;
  for (const GenreStat& s : genre_stats)
    if (s.nonmale_mean > 0.0 && s.male_mean / s.nonmale_mean >= min_ratio) out.push_back(s.genre);
  return out;
}

MovieTable ingest_movielens(const MovieLensPaths& paths, double confidence_threshold,
                            const KeyValueConfig* genre_tag_overrides) {
  MovieTable table;
  std::vector<std::string> fields;

  // movies.csv: id, title, pipe-separated genres.
  std::map<int, std::pair<std::string, std::vector<std::string>>> movies;
  std::set<std::string> genre_vocab;
  {
    CsvReader reader(paths.movies);
    if (!reader.next(fields)) throw InputError("movies file is empty");
    require_header(reader, fields, {"movieid", "title", "genres"}, "movies file");
    while (reader.next(fields)) {
      if (fields.size() < 3) throw InputError("movies file: row with fewer than 3 fields");
      ++table.counts.movies_rows;
      int id = static_cast<int>(parse_int(fields[0], "movies movieId"));
      std::vector<std::string> genres;
      for (const std::string& g : split(fields[2], '|')) {
        std::string name = lower(trim(g));
        if (name.empty() || name == "(no genres listed)") continue;
        genres.push_back(name);
        genre_vocab.insert(name);
      }
      movies[id] = {fields[1], std::move(genres)};
    }
  }

  // genome-tags.csv: tag name -> tagId, matched to genre names.
  std::map<std::string, int> tag_ids;
  {
    CsvReader reader(paths.genome_tags);
    if (!reader.next(fields)) throw InputError("genome tags file is empty");
    require_header(reader, fields, {"tagid", "tag"}, "genome tags file");
    while (reader.next(fields)) {
      if (fields.size() < 2) throw InputError("genome tags file: row with fewer than 2 fields");
      tag_ids[lower(trim(fields[1]))] = static_cast<int>(parse_int(fields[0], "genome tagId"));
    }
  }
  std::map<int, int> genre_of_tag;  // tagId -> index into matched_genres
  for (const std::string& genre : genre_vocab) {
    std::string tag_name = genre;
    if (genre_tag_overrides && genre_tag_overrides->has("map." + genre))
      tag_name = lower(genre_tag_overrides->get("map." + genre));
    auto it = tag_ids.find(tag_name);
    if (it == tag_ids.end()) continue;
    genre_of_tag[it->second] = static_cast<int>(table.matched_genres.size());
    table.matched_genres.push_back(genre);
  }

  // genome-scores.csv: keep relevance only for matched tags; remember every
  // movie that has any genome row at all.
  std::set<int> genome_movies;
  std::map<int, std::vector<double>> relevance;
  {
    CsvReader reader(paths.genome_scores);
    if (!reader.next(fields)) throw InputError("genome scores file is empty");
    require_header(reader, fields, {"movieid", "tagid", "relevance"}, "genome scores file");
    while (reader.next(fields)) {
      if (fields.size() < 3) throw InputError("genome scores file: row with fewer than 3 fields");
      ++table.counts.genome_rows;
      int movie = static_cast<int>(parse_int(fields[0], "genome movieId"));
      int tag = static_cast<int>(parse_int(fields[1], "genome tagId"));
      genome_movies.insert(movie);
      auto it = genre_of_tag.find(tag);
      if (it == genre_of_tag.end()) continue;
      auto& rel = relevance[movie];
      rel.resize(table.matched_genres.size(), 0.0);
      rel[it->second] = parse_real(fields[2], "genome relevance");
    }
  }
  table.counts.genome_movies = static_cast<int>(genome_movies.size());

  // ratings.csv pass 1: per-movie mean.
  std::map<int, std::pair<double, long long>> rating_sums;
  {
    CsvReader reader(paths.ratings);
    if (!reader.next(fields)) throw InputError("ratings file is empty");
    require_header(reader, fields, {"userid", "movieid", "rating"}, "ratings file");
    while (reader.next(fields)) {
      if (fields.size() < 3) throw InputError("ratings file: row with fewer than 3 fields");
      ++table.counts.ratings_rows;
      int movie = static_cast<int>(parse_int(fields[1], "ratings movieId"));
      auto& [sum, count] = rating_sums[movie];
      sum += parse_real(fields[2], "rating value");
      ++count;
    }
  }
  table.counts.rated_movies = static_cast<int>(rating_sums.size());

  // gender labels: movieId,gender,confidence. "male" is the reference group;
  // any other concrete gender is non-male; NA or blank drops the movie.
  std::map<int, bool> male_led;
  {
    CsvReader reader(paths.gender_labels);
    if (!reader.next(fields)) throw InputError("gender labels file is empty");
    require_header(reader, fields, {"movieid", "gender", "confidence"}, "gender labels file");
    while (reader.next(fields)) {
      if (fields.size() < 3) throw InputError("gender labels file: row with fewer than 3 fields");
      ++table.counts.label_rows;
      int movie = static_cast<int>(parse_int(fields[0], "label movieId"));
      std::string gender = lower(trim(fields[1]));
      double confidence = parse_real(fields[2], "label confidence");
      if (gender.empty() || gender == "na") continue;
      if (confidence < confidence_threshold) continue;
      male_led[movie] = gender == "male";
    }
  }
  table.counts.labeled_confident = static_cast<int>(male_led.size());

  // Inner join: movie metadata, at least one rating, genome coverage, and a
  // confident label.
  std::map<int, int> row_of_movie;
  for (const auto& [id, meta] : movies) {
    auto rating = rating_sums.find(id);
    if (rating == rating_sums.end()) continue;
    if (genome_movies.count(id) == 0) continue;
    auto label = male_led.find(id);
    if (label == male_led.end()) continue;
    MovieRecord rec;
    rec.movie_id = id;
    rec.title = meta.first;
    rec.genres = meta.second;
    rec.avg_rating = rating->second.first / rating->second.second;
    auto rel = relevance.find(id);
    rec.relevance = rel == relevance.end() ? std::vector<double>(table.matched_genres.size(), 0.0)
                                           : rel->second;
    rec.relevance.resize(table.matched_genres.size(), 0.0);
    rec.male_led = label->second;
    row_of_movie[id] = static_cast<int>(table.rows.size());
    table.rows.push_back(std::move(rec));
  }
  table.counts.table_rows = static_cast<int>(table.rows.size());

  // ratings.csv pass 2: user pools over table movies plus raw counts.
  {
    std::map<int, UserPool> pools;
    CsvReader reader(paths.ratings);
    reader.next(fields);  // header, already validated
    while (reader.next(fields)) {
      int user = static_cast<int>(parse_int(fields[0], "ratings userId"));
      int movie = static_cast<int>(parse_int(fields[1], "ratings movieId"));
      UserPool& pool = pools[user];
      pool.user_id = user;
      ++pool.rated_total;
      if (auto it = row_of_movie.find(movie); it != row_of_movie.end())
        pool.row_index.push_back(it->second);
    }
    for (auto& [user, pool] : pools) {
      std::sort(pool.row_index.begin(), pool.row_index.end());
      table.users.push_back(std::move(pool));
    }
  }
  table.counts.users_total = static_cast<int>(table.users.size());

  // Per-genre male / non-male average relevance, over movies listed in the
  // genre. Genres missing one side are left out of the stats.
  for (std::size_t g = 0; g < table.matched_genres.size(); ++g) {
    GenreStat stat;
    stat.genre = table.matched_genres[g];
    double male_sum = 0.0, nonmale_sum = 0.0;
    for (const MovieRecord& rec : table.rows) {
      if (std::find(rec.genres.begin(), rec.genres.end(), stat.genre) == rec.genres.end()) continue;
      if (rec.male_led) {
        male_sum += rec.relevance[g];
        ++stat.male_count;
      } else {
        nonmale_sum += rec.relevance[g];
        ++stat.nonmale_count;
      }
    }
    if (stat.male_count == 0 || stat.nonmale_count == 0) continue;
    stat.male_mean = male_sum / stat.male_count;
    stat.nonmale_mean = nonmale_sum / stat.nonmale_count;
    stat.ratio = stat.male_mean > 0.0 ? stat.nonmale_mean / stat.male_mean : 0.0;
    table.genre_stats.push_back(std::move(stat));
  }
  return table;
}

void MovieTable::save(const std::filesystem::path& table_csv, const std::filesystem::path& users_csv) const {
  std::ofstream out(table_csv, std::ios::binary);
  if (!out) throw InputError("cannot write movie table: " + table_csv.string());
  out << "movieId,title,male_led,avg_rating,genres";
  for (const std::string& g : matched_genres) out << ",rel_" << g;
  out << '\n';
  for (const MovieRecord& rec : rows) {
    std::string genres;
    for (std::size_t i = 0; i < rec.genres.size(); ++i) {
      if (i) genres += '|';
      genres += rec.genres[i];
    }
    out << rec.movie_id << ',' << csv_quote(rec.title) << ',' << (rec.male_led ? 1 : 0) << ','
        << format_real_exact(rec.avg_rating) << ',' << genres;
    for (double r : rec.relevance) out << ',' << format_real_exact(r);
    out << '\n';
  }
  std::ofstream uout(users_csv, std::ios::binary);
  if (!uout) throw InputError("cannot write users csv: " + users_csv.string());
  uout << "userId,rated_total,table_rows\n";
  for (const UserPool& pool : users) {
    uout << pool.user_id << ',' << pool.rated_total << ',';
    for (std::size_t i = 0; i < pool.row_index.size(); ++i) {
      if (i) uout << ';';
      uout << pool.row_index[i];
    }
    uout << '\n';
  }
}

MovieTable MovieTable::load(const std::filesystem::path& table_csv, const std::filesystem::path& users_csv) {
  MovieTable table;
  std::vector<std::string> fields;
  CsvReader reader(table_csv);
  if (!reader.next(fields)) throw InputError("movie table is empty");
  if (fields.size() < 5 || fields[0] != "movieId")
    throw InputError("movie table: unexpected header '" + reader.header_line() + "'");
  for (std::size_t c = 5; c < fields.size(); ++c) {
    if (fields[c].rfind("rel_", 0) != 0)
      throw InputError("movie table: relevance columns must be rel_<genre>");
    table.matched_genres.push_back(fields[c].substr(4));
  }
  while (reader.next(fields)) {
    if (fields.size() != 5 + table.matched_genres.size())
      throw InputError("movie table: row width mismatch");
    MovieRecord rec;
    rec.movie_id = static_cast<int>(parse_int(fields[0], "movie table movieId"));
    rec.title = fields[1];
    rec.male_led = parse_int(fields[2], "movie table male_led") != 0;
    rec.avg_rating = parse_real(fields[3], "movie table avg_rating");
    for (const std::string& g : split(fields[4], '|'))
      if (!g.empty()) rec.genres.push_back(g);
    for (std::size_t c = 0; c < table.matched_genres.size(); ++c)
      rec.relevance.push_back(parse_real(fields[5 + c], "movie table relevance"));
    table.rows.push_back(std::move(rec));
  }
  table.counts.table_rows = static_cast<int>(table.rows.size());

  CsvReader ureader(users_csv);
  if (!ureader.next(fields)) throw InputError("users csv is empty");
  while (ureader.next(fields)) {
    if (fields.size() != 3) throw InputError("users csv: expected userId,rated_total,table_rows");
    UserPool pool;
    pool.user_id = static_cast<int>(parse_int(fields[0], "users userId"));
    pool.rated_total = static_cast<int>(parse_int(fields[1], "users rated_total"));
    if (!fields[2].empty())
      for (const std::string& tok : split(fields[2], ';'))
        pool.row_index.push_back(static_cast<int>(parse_int(tok, "users table_rows")));
    table.users.push_back(std::move(pool));
  }
  table.counts.users_total = static_cast<int>(table.users.size());

  // Rebuild genre stats from the loaded rows.
  for (std::size_t g = 0; g < table.matched_genres.size(); ++g) {
    GenreStat stat;
    stat.genre = table.matched_genres[g];
    double male_sum = 0.0, nonmale_sum = 0.0;
    for (const MovieRecord& rec : table.rows) {
      if (std::find(rec.genres.begin(), rec.genres.end(), stat.genre) == rec.genres.end()) continue;
      if (rec.male_led) {
        male_sum += rec.relevance[g];
        ++stat.male_count;
      } else {
        nonmale_sum += rec.relevance[g];
        ++stat.nonmale_count;
      }
    }
    if (stat.male_count == 0 || stat.nonmale_count == 0) continue;
    stat.male_mean = male_sum / stat.male_count;
    stat.nonmale_mean = nonmale_sum / stat.nonmale_count;
    stat.ratio = stat.male_mean > 0.0 ? stat.nonmale_mean / stat.male_mean : 0.0;
    table.genre_stats.push_back(std::move(stat));
  }
  return table;
}

void MovieTable::write_ratio_csv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write ratio csv: " + path.string());
  out << "genre,male_mean,nonmale_mean,ratio_nonmale_over_male,male_count,nonmale_count\n";
  for (const GenreStat& s : genre_stats) {
    out << s.genre << ',' << format_real(s.male_mean) << ',' << format_real(s.nonmale_mean) << ','
        << format_real(s.ratio) << ',' << s.male_count << ',' << s.nonmale_count << '\n';
  }
}

std::vector<TrialRecord> run_movielens_experiment(const MovieTable& table,
                                                  const std::vector<std::string>& genres,
                                                  const std::vector<int>& k_values, int trials,
                                                  std::uint64_t seed_base, int min_rated) {
  if (genres.empty()) throw InputError("movielens experiment: need at least one genre");
  const std::vector<std::string> stereotypical = table.stereotypical_genres();
  std::vector<int> genre_cols;
  for (const std::string& g : genres) {
    std::string name = lower(g);
    if (std::find(stereotypical.begin(), stereotypical.end(), name) == stereotypical.end()) {
      std::string known;
      for (const std::string& s : stereotypical) known += (known.empty() ? "" : ", ") + s;
      throw InputError("genre '" + name + "' is not in the stereotypical set {" + known + "}");
    }
    auto it = std::find(table.matched_genres.begin(), table.matched_genres.end(), name);
    genre_cols.push_back(static_cast<int>(it - table.matched_genres.begin()));
  }

  std::vector<int> qualifying;
  for (std::size_t u = 0; u < table.users.size(); ++u)
    if (table.users[u].rated_total >= min_rated) qualifying.push_back(static_cast<int>(u));
  if (qualifying.empty())
    throw InputError("movielens experiment: no user has rated at least " + std::to_string(min_rated) +
                     " movies");

  std::string dataset = "movielens:";
  for (std::size_t i = 0; i < genres.size(); ++i) dataset += (i ? "+" : "") + lower(genres[i]);

  std::vector<TrialRecord> records;
  for (int k : k_values) {
    for (int trial = 0; trial < trials; ++trial) {
      const std::uint64_t seed = derive_seed(seed_base, {kStreamMovieLens, static_cast<std::uint64_t>(k),
                                                         static_cast<std::uint64_t>(trial)});
      Rng rng(seed);
      const UserPool& user = table.users[qualifying[rng.next_below(qualifying.size())]];
      const std::vector<int>& pool = user.row_index;
      auto emit = [&](Algo algo, double latent, double observed, double nlu, std::string flags) {
        double male_share = 0.0;
        for (int row : pool) male_share += table.rows[row].male_led ? 1.0 : 0.0;
        if (!pool.empty()) male_share /= static_cast<double>(pool.size());
        records.push_back(TrialRecord{dataset, 0.0, male_share, 0.0, algo, seed, k, latent, observed,
                                      nlu, std::move(flags)});
      };
      if (pool.empty()) {
        for (Algo algo : {Algo::kUncons, Algo::kProportionalRepr, Algo::kAlgorithm1})
          emit(algo, 0.0, 0.0, 0.0, "error:empty candidate pool");
        continue;
      }

      const int pool_n = static_cast<int>(pool.size());
      const int kk = std::min(k, pool_n);
      const bool pool_short = k > pool_n;

      // Observed objective: sqrt of summed relevance per chosen genre.
      std::vector<double> data;
      data.reserve(static_cast<std::size_t>(pool_n) * genre_cols.size());
      for (int row : pool)
        for (int col : genre_cols) data.push_back(table.rows[row].relevance[col]);
      UtilityMatrix observed(pool_n, static_cast<int>(genre_cols.size()), std::move(data));
      std::vector<ConcaveCurve> curves(genre_cols.size(), ConcaveCurve::sqrt());
      ObjectiveSpec observed_spec(curves, observed);

      std::vector<int> assignment(pool_n);
      for (int i = 0; i < pool_n; ++i) assignment[i] = table.rows[pool[i]].male_led ? 0 : 1;
      GroupStructure groups = GroupStructure::from_assignment(std::move(assignment), 2);
      CategoryStructure categories = categories_from_support(observed);

      // Latent quality of a selection: mean average rating. Reference: the
      // top-rated kk movies of the pool.
      auto mean_rating = [&](const std::vector<int>& items) {
        if (items.empty()) return 0.0;
        double s = 0.0;
        for (int i : items) s += table.rows[pool[i]].avg_rating;
        return s / static_cast<double>(items.size());
      };
      std::vector<int> by_rating(pool_n);
      for (int i = 0; i < pool_n; ++i) by_rating[i] = i;
      std::sort(by_rating.begin(), by_rating.end(), [&](int a, int b) {
        double ra = table.rows[pool[a]].avg_rating, rb = table.rows[pool[b]].avg_rating;
        if (ra != rb) return ra > rb;
        return a < b;
      });
      by_rating.resize(kk);
      const double reference = mean_rating(by_rating);

      for (Algo algo : {Algo::kUncons, Algo::kProportionalRepr, Algo::kAlgorithm1}) {
        try {
          SelectionResult sel;
          switch (algo) {
            case Algo::kUncons:
              sel = greedy_cardinality(observed_spec, kk);
              break;
            case Algo::kProportionalRepr: {
              FairnessConstraint proportional{{0.0, 0.0}, {1.0, 1.0}};
              sel = greedy_with_caps(observed_spec, kk, groups, fairness_caps(proportional, groups, kk));
              break;
            }
            case Algo::kAlgorithm1:
              sel = algorithm1(observed, kk, groups, categories, curves);
              break;
          }
          std::string flags;
          auto add_flag = [&flags](const char* f) {
            if (!flags.empty()) flags += '|';
            flags += f;
          };
          if (pool_short) add_flag("pool_short");
          if (sel.budget_unmet) add_flag("budget_unmet");
          if (sel.seeds_overflow) add_flag("seeds_overflow");
          const double latent = mean_rating(sel.items);
          const double observed_value = eval_objective(observed_spec, sel.items);
          const double nlu = reference > 0.0 ? latent / reference : 0.0;
          emit(algo, latent, observed_value, nlu, std::move(flags));
        } catch (const std::runtime_error& e) {
          emit(algo, 0.0, 0.0, 0.0, std::string("error:") + e.what());
        }
      }
    }
  }
  return records;
}

}  // namespace biasmax
