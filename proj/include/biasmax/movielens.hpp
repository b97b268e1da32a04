#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "biasmax/config.hpp"
#include "biasmax/harness.hpp"

namespace biasmax {

struct MovieLensPaths {
  std::filesystem::path ratings;        // userId,movieId,rating,timestamp
  std::filesystem::path genome_scores;  // movieId,tagId,relevance
  std::filesystem::path genome_tags;    // tagId,tag
  std::filesystem::path movies;         // movieId,title,genres (pipe-separated)
  std::filesystem::path gender_labels;  // movieId,gender,confidence
};

struct MovieRecord {
  int movie_id = 0;
  std::string title;
  std::vector<std::string> genres;  // lowercased, from the movies file
  double avg_rating = 0.0;
  std::vector<double> relevance;    // parallel to MovieTable::matched_genres
  bool male_led = false;
};

struct GenreStat {
  std::string genre;
  double male_mean = 0.0;
  double nonmale_mean = 0.0;
  double ratio = 0.0;  // nonmale_mean / male_mean
  int male_count = 0;
  int nonmale_count = 0;
};

struct IngestCounts {
  long long movies_rows = 0;
  long long ratings_rows = 0;
  long long genome_rows = 0;
  long long label_rows = 0;
  int rated_movies = 0;
  int genome_movies = 0;
  int labeled_confident = 0;
  int table_rows = 0;
  int users_total = 0;
};

struct UserPool {
  int user_id = 0;
  int rated_total = 0;         // raw count over the whole ratings file
  std::vector<int> row_index;  // table rows this user rated, ascending
};

struct MovieTable {
  std::vector<std::string> matched_genres;  // genres with a genome tag, sorted
  std::vector<MovieRecord> rows;            // sorted by movie id
  std::vector<UserPool> users;              // sorted by user id
  std::vector<GenreStat> genre_stats;       // per matched genre with both groups present
  IngestCounts counts;

  // Genres whose male-led average relevance is at least `min_ratio` times the
  // non-male-led average.
  std::vector<std::string> stereotypical_genres(double min_ratio = 2.0) const;

  void save(const std::filesystem::path& table_csv, const std::filesystem::path& users_csv) const;
  static MovieTable load(const std::filesystem::path& table_csv, const std::filesystem::path& users_csv);
  void write_ratio_csv(const std::filesystem::path& path) const;
};

// Joins the five files into one movie table: average rating, per-genre
// relevance (genome tag matched to the genre name case-insensitively, with
// optional overrides `map.<genre> = <tag>`), and lead gender filtered to
// labels at or above the confidence threshold.
MovieTable ingest_movielens(const MovieLensPaths& paths, double confidence_threshold,
                            const KeyValueConfig* genre_tag_overrides = nullptr);

// Per (k, trial): samples a user with at least `min_rated` ratings, restricts
// the candidate pool to that user's movies, and runs the three algorithms on
// the square-root-of-relevance objective over the chosen genres. Latent
// quality is the mean average rating of the selection, normalized against
// the top-rated pool subset of the same size.
std::vector<TrialRecord> run_movielens_experiment(const MovieTable& table,
                                                  const std::vector<std::string>& genres,
                                                  const std::vector<int>& k_values, int trials,
                                                  std::uint64_t seed_base, int min_rated = 200);

}  // namespace biasmax
