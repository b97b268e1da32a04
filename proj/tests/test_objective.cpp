#include <doctest.h>

#include <cmath>
#include <vector>

#include "biasmax/errors.hpp"
#include "biasmax/objective.hpp"
#include "support.hpp"

using namespace biasmax;
using testsupport::all_curve_kinds;
using testsupport::random_matrix;
using testsupport::random_subset;

namespace {

ObjectiveSpec unit_weights(ConcaveCurve curve, int n) {
  return ObjectiveSpec({curve}, UtilityMatrix(n, 1, std::vector<double>(n, 1.0)));
}

}  // namespace

TEST_CASE("eval_objective closed forms") {
  ObjectiveSpec sqrt_spec = unit_weights(ConcaveCurve::sqrt(), 4);
  CHECK(eval_objective(sqrt_spec, std::vector<int>{}) == 0.0);
  CHECK(eval_objective(sqrt_spec, std::vector<int>{0, 1, 2, 3}) == doctest::Approx(2.0));

  // One item with row (1, 3) under log(1+x) curves on both attributes.
  ObjectiveSpec log_spec({ConcaveCurve::log1p(), ConcaveCurve::log1p()},
                         UtilityMatrix(1, 2, {1.0, 3.0}));
  CHECK(eval_objective(log_spec, std::vector<int>{0}) ==
        doctest::Approx(std::log(2.0) + std::log(4.0)).epsilon(1e-12));
  CHECK(eval_objective(log_spec, std::vector<int>{0}) == doctest::Approx(2.0794).epsilon(1e-4));
}

TEST_CASE("eval_objective rejects bad subsets") {
  ObjectiveSpec spec = unit_weights(ConcaveCurve::linear(), 3);
  CHECK_THROWS_AS(eval_objective(spec, std::vector<int>{3}), InputError);
  CHECK_THROWS_AS(eval_objective(spec, std::vector<int>{-1}), InputError);
  CHECK_THROWS_AS(eval_objective(spec, std::vector<int>{1, 1}), InputError);
}

TEST_CASE("empty set evaluates to zero for every built-in curve") {
  for (const ConcaveCurve& curve : all_curve_kinds()) {
    ObjectiveSpec spec = unit_weights(curve, 5);
    CHECK(eval_objective(spec, std::vector<int>{}) == 0.0);
    CHECK(curve(0.0) == 0.0);
  }
}

TEST_CASE("marginal gains of the unit-weight sqrt instance") {
  ObjectiveSpec spec = unit_weights(ConcaveCurve::sqrt(), 5);
  CHECK(marginal_gain(spec, std::vector<int>{0}, 1) ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
  CHECK(marginal_gain(spec, std::vector<int>{0}, 1) == doctest::Approx(0.414).epsilon(1e-2));
  CHECK(marginal_gain(spec, std::vector<int>{0, 1}, 2) == doctest::Approx(0.318).epsilon(1e-2));
  CHECK_THROWS_AS(marginal_gain(spec, std::vector<int>{0}, 0), InputError);
}

TEST_CASE("modular case: marginal gain is the item weight") {
  UtilityMatrix w(4, 1, {3.0, 1.5, 2.25, 0.5});
  ObjectiveSpec spec({ConcaveCurve::linear()}, w);
  CHECK(marginal_gain(spec, std::vector<int>{1, 3}, 2) == doctest::Approx(2.25).epsilon(1e-15));
}

TEST_CASE("curves are increasing and concave on a sampled grid") {
  for (const ConcaveCurve& g : all_curve_kinds()) {
    double prev = g(0.0);
    for (int s = 1; s <= 200; ++s) {
      double x = 0.1 * s;
      double y = g(x);
      CHECK(y >= prev - 1e-12);  // increasing
      prev = y;
    }
    // Midpoint concavity on sampled triples.
    for (int s = 0; s < 100; ++s) {
      double a = 0.07 * s, b = a + 0.5 + 0.11 * s;
      CHECK(g(0.5 * (a + b)) >= 0.5 * (g(a) + g(b)) - 1e-9);
    }
  }
}

TEST_CASE("monotonicity and submodularity on random instances") {
  Rng rng(7001);
  for (const ConcaveCurve& curve : all_curve_kinds()) {
    std::vector<ConcaveCurve> curves{curve, curve};
    UtilityMatrix w = random_matrix(rng, 12, 2, 0.0, 3.0, 0.3);
    ObjectiveSpec spec(curves, w);
    for (int trial = 0; trial < 500; ++trial) {
      int t_size = 1 + static_cast<int>(rng.next_below(10));
      std::vector<int> t = random_subset(rng, 11, t_size);  // leave item 11 free
      std::vector<int> s;
      for (int i : t)
        if (rng.next_double() < 0.6) s.push_back(i);
      CHECK(eval_objective(spec, s) <= eval_objective(spec, t) + 1e-12);
      CHECK(marginal_gain(spec, s, 11) >= marginal_gain(spec, t, 11) - 1e-9);
    }
  }
}

TEST_CASE("decompose_by_category matches direct per-category evaluation") {
  Rng rng(7002);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 8, m = 3;
    // Support categories: item i positive on exactly one attribute.
    std::vector<double> data(n * m, 0.0);
    for (int i = 0; i < n; ++i) data[i * m + rng.next_below(m)] = 0.5 + rng.next_double();
    UtilityMatrix w(n, m, data);
    CategoryStructure cats = categories_from_support(w);
    REQUIRE(cats.disjoint);
    std::vector<ConcaveCurve> curves{ConcaveCurve::sqrt(), ConcaveCurve::log1p(), ConcaveCurve::linear()};
    ObjectiveSpec spec(curves, w);

    std::vector<int> subset = random_subset(rng, n, 1 + static_cast<int>(rng.next_below(n)));
    std::vector<double> parts = decompose_by_category(spec, cats, subset);

    double part_sum = 0.0;
    for (int j = 0; j < m; ++j) {
      double direct = 0.0;
      for (int i : subset)
        if (w(i, j) > 0.0) direct += w(i, j);
      CHECK(parts[j] == doctest::Approx(curves[j](direct)).epsilon(1e-12));
      part_sum += parts[j];
    }
    double whole = eval_objective(spec, subset);
    CHECK(part_sum == doctest::Approx(whole).epsilon(1e-12));
  }
}

TEST_CASE("decompose_by_category edge cases") {
  UtilityMatrix w(4, 2, {1.0, 0.0, 2.0, 0.0, 0.0, 3.0, 0.0, 4.0});
  ObjectiveSpec spec({ConcaveCurve::linear(), ConcaveCurve::linear()}, w);
  CategoryStructure cats = categories_from_support(w);

  // Subset inside the first category only.
  std::vector<double> parts = decompose_by_category(spec, cats, std::vector<int>{0, 1});
  CHECK(parts[0] == doctest::Approx(3.0));
  CHECK(parts[1] == 0.0);

  CategoryStructure overlapping = CategoryStructure::from_members({{0, 1, 2}, {2, 3}});
  CHECK_FALSE(overlapping.disjoint);
  CHECK_THROWS_AS(decompose_by_category(spec, overlapping, std::vector<int>{0}), SizeError);
}

TEST_CASE("tau range query") {
  UtilityMatrix w(2, 2, {0.0, 0.5, 1.5, 0.9});
  CHECK(w.within_tau_range(0.4));    // nonzeros in (0.4, 2.5)
  CHECK_FALSE(w.within_tau_range(0.5));  // 0.5 not strictly above tau
  CHECK_FALSE(w.within_tau_range(0.8));
  CHECK_THROWS_AS(w.within_tau_range(0.0), InputError);
}

TEST_CASE("matrix construction validates entries") {
  CHECK_THROWS_AS(UtilityMatrix(1, 1, {-1.0}), InputError);
  CHECK_THROWS_AS(UtilityMatrix(1, 1, {std::nan("")}), InputError);
  CHECK_THROWS_AS(UtilityMatrix(2, 2, {1.0, 2.0, 3.0}), InputError);
}

TEST_CASE("coverage weight clamps certain relevance") {
  CHECK(coverage_weight(0.0) == 0.0);
  CHECK(coverage_weight(0.5) == doctest::Approx(std::log(2.0)));
  CHECK(coverage_weight(1.0) == doctest::Approx(std::log(1e12)));
  CHECK(std::isfinite(coverage_weight(1.0)));
}

TEST_CASE("coverage curve reproduces the product form") {
  // 1 - prod(1 - p_i) with g(x) = prior*(1 - e^-x) and w = ln(1/(1-p)).
  std::vector<double> probs{0.2, 0.5, 0.75};
  double prior = 0.6;
  std::vector<double> data;
  for (double p : probs) data.push_back(coverage_weight(p));
  UtilityMatrix w(3, 1, data);
  ObjectiveSpec spec({ConcaveCurve::neg_exp_coverage(prior)}, w);
  double expected = prior * (1.0 - (1.0 - 0.2) * (1.0 - 0.5) * (1.0 - 0.75));
  CHECK(eval_objective(spec, std::vector<int>{0, 1, 2}) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("curve parse round trip") {
  for (const ConcaveCurve& curve : all_curve_kinds()) {
    ConcaveCurve back = ConcaveCurve::parse(curve.to_string());
    CHECK(back.kind() == curve.kind());
    CHECK(back.param() == curve.param());
  }
  CHECK_THROWS_AS(ConcaveCurve::parse("nope"), InputError);
  CHECK_THROWS_AS(ConcaveCurve::parse("scaledsqrt:-1"), InputError);
  CHECK_THROWS_AS(ConcaveCurve::parse("scaledsqrt"), InputError);
}
