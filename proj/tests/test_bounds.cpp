#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "qramsey/bounds.hpp"
#include "qramsey/errors.hpp"

using namespace qramsey;
using namespace qramsey::bounds;

TEST_CASE("lambda_star values") {
  CHECK(lambda_star(0.5) == 0.0);
  CHECK(lambda_star(0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(lambda_star(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(lambda_star(0.25) == doctest::Approx(0.25 * std::log(0.5) + 0.75 * std::log(1.5)));
  CHECK(lambda_star(0.25) == doctest::Approx(0.130812).epsilon(1e-6));
  CHECK(std::isinf(lambda_star(-0.01)));
  CHECK(std::isinf(lambda_star(1.01)));
  // Continuity at the endpoints.
  CHECK(std::fabs(lambda_star(1e-12) - std::log(2.0)) < 1e-9);
}

TEST_CASE("lambda_star shape on a fine grid") {
  std::size_t bad = 0;
  double prev = lambda_star(0.0);
  for (int i = 1; i <= 5000; ++i) {
    const double v = lambda_star(i * 1e-4);
    if (!(v < prev)) ++bad;
    prev = v;
  }
  for (int i = 5001; i <= 10000; ++i) {
    const double v = lambda_star(i * 1e-4);
    if (!(v > prev)) ++bad;
    prev = v;
  }
  CHECK(bad == 0);
  for (int i = 0; i <= 5000; ++i) {
    const double eps = i * 1e-4;
    CHECK(lambda_star(0.5 - eps) >= taylor_floor(eps));
  }
}

TEST_CASE("taylor floor examples") {
  CHECK(taylor_floor(0.0) == 0.0);
  CHECK(taylor_floor(0.5) == 0.5);
  CHECK(taylor_floor(0.1) == doctest::Approx(0.02));
  CHECK(lambda_star(0.4) == doctest::Approx(0.020135).epsilon(1e-4));
}

TEST_CASE("dependent set tail") {
  CHECK(dependent_set_tail(0, 3) == 0.125);
  CHECK(dependent_set_tail(0, 2) == 0.5);
  CHECK(dependent_set_tail(2, 5) == doctest::Approx(1.0));
  CHECK_THROWS_AS(dependent_set_tail(3, 5), DomainError);
  for (std::size_t k = 2; k <= 5; ++k) {
    CHECK(dependent_set_tail(0, k) == std::ldexp(1.0, -static_cast<int>(k * (k - 1) / 2)));
    CHECK(dependent_set_tail(0, k) == oracle::dependent_probability(k, 0));
  }
  // The bound dominates the exact probability for every admissible t_bar.
  for (std::size_t k = 2; k <= 6; ++k) {
    for (std::size_t t = 0; 2 * t <= k - 1; ++t) {
      CHECK(dependent_set_tail(t, k) >= oracle::dependent_probability(k, t) - 1e-15);
    }
  }
  // Log-space evaluation keeps large k finite and positive.
  CHECK(dependent_set_tail(20, 60) > 0.0);
  CHECK(dependent_set_tail(20, 60) < 1e-30);
}

TEST_CASE("random-graph lower bounds") {
  CHECK(variable_lower_bound(7, 0.0) == doctest::Approx(7.0 / std::exp(1.0)));
  CHECK(fixed_lower_bound_lll(7, 0.0) == doctest::Approx(7.0 / std::exp(1.0)));
  CHECK(variable_lower_bound(3, 0.5) == doctest::Approx(3.0 / std::exp(1.0) * 2.0));
  CHECK(variable_lower_bound(3, 0.5) == doctest::Approx(2.2073).epsilon(1e-4));
  for (std::size_t k : {2U, 5U, 30U, 200U}) {
    for (double eps : {0.0, 0.05, 0.2, 0.45, 0.5}) {
      CHECK(fixed_lower_bound_lll(k, eps) / variable_lower_bound(k, eps) ==
            doctest::Approx(std::exp(lambda_star(0.5 - eps))));
      CHECK(log_variable_lower_bound(k, eps) == doctest::Approx(std::log(variable_lower_bound(k, eps))));
    }
  }
  CHECK(std::isfinite(log_variable_lower_bound(100000, 0.4)));
}

TEST_CASE("erdos-spencer bound") {
  CHECK(erdos_spencer_bound(50, 50) == doctest::Approx(std::pow(50.0, 1.5) / 1000.0 * std::sqrt(std::log(5.0))));
  CHECK(erdos_spencer_bound(1000, 100) == doctest::Approx(1.9780).epsilon(1e-4));
  double prev = 0.0;
  for (std::size_t n = 10; n < 2000; n += 7) {
    const double v = erdos_spencer_bound(n, 10);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(erdos_spencer_bound(5, 0), DomainError);
  CHECK_THROWS_AS(erdos_spencer_bound(5, 6), DomainError);
}

TEST_CASE("thinning condition") {
  CHECK(thinning_condition(50, 0.5));
  CHECK_FALSE(thinning_condition(1, 0.0));
  CHECK_FALSE(thinning_condition(10, 0.0));
  for (std::size_t k = 2; k < 3000; k += 13) {
    CHECK(thinning_condition(k, std::sqrt(2.0 * std::log(static_cast<double>(k) + 1.0) / static_cast<double>(k - 1))));
  }
}

TEST_CASE("hypergeometric tail") {
  CHECK(hypergeometric_tail(100, 10, 50, 0.0) == 1.0);
  CHECK(hypergeometric_tail(100, 10, 50, 5.0) == doctest::Approx(std::exp(-2.5)));
  CHECK(hypergeometric_tail(100, 10, 50, 5.0) == doctest::Approx(0.08208).epsilon(1e-4));
  CHECK_THROWS_AS(hypergeometric_tail(10, 11, 5, 1.0), DomainError);
  CHECK_THROWS_AS(hypergeometric_tail(10, 5, 0, 1.0), DomainError);
  CHECK_THROWS_AS(hypergeometric_tail(10, 5, 5, -1.0), DomainError);
  const double freq = oracle::hypergeometric_frequency(60, 20, 30, 3.0, 20000, 5);
  CHECK(freq <= hypergeometric_tail(60, 20, 30, 3.0));
}

TEST_CASE("chappell-gimbel numbers") {
  CHECK(chappell_gimbel_exact(6, 2) == 8);
  CHECK_FALSE(chappell_gimbel_exact(10, 4).has_value());
  CHECK(chappell_gimbel_exact(10, 3) == 14);
  CHECK(chappell_gimbel_upper(6, 2) == 12);
  CHECK(chappell_gimbel_upper(5, 1) == 5);  // 3 C(0,0) + C(2,1)
  CHECK(chappell_gimbel_lower(6, 2) == 8);
  CHECK_THROWS_AS(chappell_gimbel_upper(2, 2), DomainError);
  CHECK_THROWS_AS(chappell_gimbel_exact(3, 0), DomainError);
  for (std::size_t k = 3; k < 40; ++k) {
    for (std::size_t t = 1; 4 * t <= k + 2; ++t) CHECK(*chappell_gimbel_exact(k, t) <= chappell_gimbel_upper(k, t));
  }
}

TEST_CASE("conclusion brackets") {
  const Bracket top = conclusion_brackets(1.0);
  CHECK(top.regime == Regime::exponential);
  CHECK(top.lower == doctest::Approx(0.5 * std::log(2.0)));
  CHECK(top.upper == doctest::Approx(2.0 * std::log(2.0)));
  const Bracket quarter = conclusion_brackets(0.25);
  CHECK(quarter.regime == Regime::linear);
  CHECK(quarter.lower == doctest::Approx(1.5));
  CHECK(quarter.upper == doctest::Approx(std::sqrt(5.0)));
  CHECK_THROWS_AS(conclusion_brackets(0.5), DomainError);
  CHECK_THROWS_AS(conclusion_brackets(0.2), DomainError);
  for (int i = 0; i < 1000; ++i) {
    const double lin = 0.25 + 0.25 * i / 1000.0;
    CHECK(conclusion_brackets(lin).lower <= conclusion_brackets(lin).upper);
    const double ex = 0.5 + 0.5 * (i + 1) / 1000.0;
    CHECK(conclusion_brackets(ex).lower <= conclusion_brackets(ex).upper);
  }
}
