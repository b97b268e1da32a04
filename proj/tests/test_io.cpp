#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "biasmax/config.hpp"
#include "biasmax/csv.hpp"
#include "biasmax/errors.hpp"
#include "biasmax/objective.hpp"
#include "support.hpp"

using namespace biasmax;
using testsupport::random_matrix;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("csv line splitting honors quotes") {
  auto fields = split_csv_line("11,\"American President, The (1995)\",Comedy|Drama");
  REQUIRE(fields.size() == 3);
  CHECK(fields[1] == "American President, The (1995)");
  fields = split_csv_line("1,\"a \"\"quoted\"\" title\",x");
  CHECK(fields[1] == "a \"quoted\" title");
  fields = split_csv_line("a,,b\r");
  REQUIRE(fields.size() == 3);
  CHECK(fields[1].empty());
  CHECK(fields[2] == "b");
}

TEST_CASE("utility matrix csv round trip is exact") {
  Rng rng(1234);
  UtilityMatrix w = random_matrix(rng, 25, 4, 0.0, 1e6, 0.2);
  auto path = std::filesystem::temp_directory_path() / "biasmax_matrix_test.csv";
  w.save_csv(path);
  UtilityMatrix back = UtilityMatrix::load_csv(path);
  CHECK(back.items() == w.items());
  CHECK(back.attrs() == w.attrs());
  CHECK(back.data() == w.data());  // bit-exact via %.17g
  std::filesystem::remove(path);
}

TEST_CASE("utility matrix csv rejects malformed input") {
  auto bad_header = write_temp("biasmax_bad1.csv", "foo,a1\n1,2\n");
  CHECK_THROWS_WITH_AS(UtilityMatrix::load_csv(bad_header),
                       doctest::Contains("bad header 'foo,a1'"), InputError);
  auto bad_cols = write_temp("biasmax_bad2.csv", "item,a1,b2\n1,2,3\n");
  CHECK_THROWS_AS(UtilityMatrix::load_csv(bad_cols), InputError);
  auto gap = write_temp("biasmax_bad3.csv", "item,a1\n1,2\n3,4\n");
  CHECK_THROWS_AS(UtilityMatrix::load_csv(gap), InputError);
  auto negative = write_temp("biasmax_bad4.csv", "item,a1\n1,-2\n");
  CHECK_THROWS_AS(UtilityMatrix::load_csv(negative), InputError);
  for (const char* name : {"biasmax_bad1.csv", "biasmax_bad2.csv", "biasmax_bad3.csv", "biasmax_bad4.csv"})
    std::filesystem::remove(std::filesystem::temp_directory_path() / name);
}

TEST_CASE("key-value config parsing") {
  KeyValueConfig cfg = KeyValueConfig::parse(
      "# sweep setup\n"
      "dataset = synthetic2\n"
      "betas = 0.001, 0.01, 0.1\n"
      "trials = 50\n"
      "fair.u = 0,0\n");
  CHECK(cfg.get("dataset") == "synthetic2");
  CHECK(cfg.get_reals("betas") == std::vector<double>{0.001, 0.01, 0.1});
  CHECK(cfg.get_int("trials") == 50);
  CHECK(cfg.get_or("missing", "x") == "x");
  CHECK_THROWS_AS(cfg.get("missing"), ConfigError);
  CHECK_THROWS_AS(KeyValueConfig::parse("novalue\n"), InputError);
  CHECK(cfg.keys_with_prefix("fair.") == std::vector<std::string>{"fair.u"});

  // Round trip through text.
  KeyValueConfig back = KeyValueConfig::parse(cfg.to_string());
  CHECK(back.get("betas") == cfg.get("betas"));
}

TEST_CASE("curve config round trip") {
  std::vector<ConcaveCurve> curves{ConcaveCurve::log1p(), ConcaveCurve::scaled_sqrt(0.05),
                                   ConcaveCurve::neg_exp_coverage(0.3)};
  KeyValueConfig cfg;
  curves_to_config(curves, cfg);
  CHECK(cfg.get("curve.1") == "log1p");
  std::vector<ConcaveCurve> back = curves_from_config(cfg);
  REQUIRE(back.size() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(back[j].kind() == curves[j].kind());
    CHECK(back[j].param() == curves[j].param());
  }
  CHECK_THROWS_AS(curves_from_config(KeyValueConfig{}), ConfigError);
}
