#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bas/objectives.hpp"
#include "test_support.hpp"

using bas::Position;

TEST_CASE("michalewicz known values") {
  CHECK(std::abs(bas::michalewicz(Position{2.20319, 1.57049}) - (-1.8013)) <= 1e-3);
  for (std::size_t k : {1U, 2U, 7U}) {
    CHECK(bas::michalewicz(Position(k, 0.0)) == 0.0);
    CHECK(bas::michalewicz(Position(k, 0.0), 3) == 0.0);
  }
  CHECK_THROWS_AS((void)bas::michalewicz(Position{1.0}, 0), bas::UsageError);
}

TEST_CASE("michalewicz 1-D minimum matches a brute-force scan") {
  // Scan of the first term over [0, pi] at step 1e-5.
  const auto scan = bas_test::scan_mich_1d(1e-5);
  CHECK(scan.x == doctest::Approx(2.2029).epsilon(1e-4));
  CHECK(scan.value == doctest::Approx(-0.8013).epsilon(1e-4));
  CHECK(bas::michalewicz(Position{2.2029}) == doctest::Approx(-0.8013).epsilon(1e-4));
  CHECK(bas::michalewicz(Position{scan.x}) == doctest::Approx(scan.value).epsilon(1e-12));
}

TEST_CASE("michalewicz agrees with the term-wise reference (property)") {
  std::mt19937_64 gen(1);
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = 1 + gen() % 10;
    const int m = 1 + static_cast<int>(gen() % 12);
    const auto x = bas_test::random_vector(gen, k, -4.0, 4.0);
    double expected = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      expected += bas_test::mich_term_reference(x[j], static_cast<int>(j + 1), m);
    }
    REQUIRE(bas::michalewicz(x, m) == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("michalewicz is bounded on [0, pi]^k (property)") {
  std::mt19937_64 gen(2);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t k = 1 + gen() % 10;
    const auto x = bas_test::random_vector(gen, k, 0.0, std::numbers::pi);
    const double v = bas::michalewicz(x);
    REQUIRE(v <= 0.0);
    REQUIRE(v >= -static_cast<double>(k));
  }
}

TEST_CASE("goldstein_price known values") {
  CHECK(bas::goldstein_price(Position{0.0, -1.0}) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(bas::goldstein_price(Position{0.0, -1.0}) == 3.0);
  // (1 + 19) * (30 + 0)
  CHECK(bas::goldstein_price(Position{0.0, 0.0}) == 600.0);
  // (1 + 9 * 3) * (30 + 1 * 37)
  CHECK(bas::goldstein_price(Position{1.0, 1.0}) == 1876.0);
  CHECK_THROWS_AS((void)bas::goldstein_price(Position{0.0}), bas::UsageError);
  CHECK_THROWS_AS((void)bas::goldstein_price(Position{0.0, 0.0, 0.0}), bas::UsageError);
}

TEST_CASE("goldstein_price matches the reference polynomial (property)") {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 1000; ++i) {
    const auto x = bas_test::random_vector(gen, 2, -3.0, 3.0);
    REQUIRE(bas::goldstein_price(x) ==
            doctest::Approx(bas_test::gp_reference(x[0], x[1])).epsilon(1e-12));
  }
}

TEST_CASE("goldstein_price is at least 3 on a 401x401 grid, equal only at (0, -1)") {
  int minima = 0;
  for (int i = 0; i <= 400; ++i) {
    for (int j = 0; j <= 400; ++j) {
      const double x = -2.0 + 4.0 * i / 400.0;
      const double y = -2.0 + 4.0 * j / 400.0;
      const double v = bas::goldstein_price(Position{x, y});
      REQUIRE(v >= 3.0);
      if (v == 3.0) {
        ++minima;
        CHECK(x == 0.0);
        CHECK(y == -1.0);
      }
    }
  }
  CHECK(minima == 1);
}

TEST_CASE("sphere") {
  CHECK(bas::sphere(Position{0.0, 0.0}) == 0.0);
  CHECK(bas::sphere(Position{3.0, 4.0}) == 25.0);
  CHECK(bas::sphere(Position{1.0, 1.0, 1.0}) == 3.0);
}

TEST_CASE("lookup_objective metadata") {
  SUBCASE("goldstein_price is fixed at two dimensions") {
    const auto gp = bas::lookup_objective("goldstein_price", 2);
    CHECK(gp.fixed_dimension == 2U);
    CHECK(gp.default_init_box == bas::Box::uniform(2, {-2.0, 2.0}));
    CHECK_THROWS_AS((void)bas::lookup_objective("goldstein_price", 3), bas::UsageError);
  }
  SUBCASE("michalewicz accepts any dimension over [0, pi]") {
    const auto m5 = bas::lookup_objective("michalewicz", 5);
    CHECK_FALSE(m5.fixed_dimension.has_value());
    CHECK(m5.dimension == 5);
    CHECK(m5.default_init_box == bas::Box::uniform(5, {0.0, std::numbers::pi}));
    CHECK_FALSE(m5.known_optimum.has_value());
    CHECK_THROWS_AS((void)bas::lookup_objective("michalewicz", 0), bas::UsageError);
  }
  SUBCASE("sphere box") {
    CHECK(bas::lookup_objective("sphere", 3).default_init_box ==
          bas::Box::uniform(3, {-1.0, 1.0}));
  }
  SUBCASE("unknown names list the valid ones") {
    CHECK_THROWS_WITH_AS((void)bas::lookup_objective("rastrigin", 2),
                         doctest::Contains("michalewicz, goldstein_price, sphere"),
                         bas::UsageError);
  }
}

TEST_CASE("registry consistency: known optima evaluate to their stated values") {
  for (const auto& name : bas::objective_names()) {
    for (std::size_t dim : {1U, 2U, 3U}) {
      if (name == "goldstein_price" && dim != 2) continue;
      const auto obj = bas::lookup_objective(name, dim);
      if (!obj.known_optimum) continue;
      CAPTURE(name);
      CAPTURE(dim);
      const double v = obj(obj.known_optimum->x);
      const double expected = obj.known_optimum->value;
      CHECK(std::abs(v - expected) <= 1e-6 * std::abs(expected));
      CHECK(obj.default_init_box.contains(obj.known_optimum->x));
    }
  }
}

TEST_CASE("objectives are finite inside their boxes and pure (property)") {
  std::mt19937_64 gen(4);
  for (const auto& name : bas::objective_names()) {
    const std::size_t dim = name == "goldstein_price" ? 2 : 4;
    const auto obj = bas::lookup_objective(name, dim);
    for (int i = 0; i < 500; ++i) {
      bas::Position x(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const auto& a = obj.default_init_box.axes[j];
        x[j] = std::uniform_real_distribution<double>(a.lo, a.hi)(gen);
      }
      const double v = obj(x);
      REQUIRE(std::isfinite(v));
      REQUIRE(obj(x) == v);
    }
  }
}
