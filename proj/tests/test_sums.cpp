#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ineqlab/sums.hpp"
#include "ineqlab/zeta.hpp"

using namespace ineqlab;
using namespace ineqlab::sums;

namespace {
constexpr double kEulerGamma = 0.57721566490153286;
}

TEST_CASE("registry models satisfy their invariants") {
  const auto reg = series_registry();
  CHECK(reg.size() >= 6);
  for (const auto& m : reg) {
    CAPTURE(m.id);
    CHECK(m.antiderivative(static_cast<double>(m.start)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(m.term(10.0) > m.term(11.0));
  }
  const auto h = harmonic_model();
  CHECK(h.antiderivative(5.0) == doctest::Approx(std::log(5.0)));
  const auto q = q_model(0.5);
  CHECK(q.antiderivative(9.0) == doctest::Approx(4.0));
}

TEST_CASE("increasing terms and bad antiderivatives are rejected") {
  CHECK_THROWS_AS(make_model("up", [](double k) { return k; }, [](double x) { return (x * x - 1) / 2; }, 1),
                  ConstructionError);
  CHECK_THROWS_AS(make_model("off", [](double k) { return 1 / k; }, [](double x) { return 2 * std::log(x); }, 1),
                  ConstructionError);
  CHECK_THROWS_AS(power_model(0.5), ConstructionError);
  CHECK_THROWS_AS(model_by_name("bogus"), ParameterError);
  CHECK(model_by_name("q:0.25").params.at(0) == 0.25);
}

TEST_CASE("partial sums") {
  const auto h = harmonic_model();
  CHECK(partial_sum(h, 1) == 1.0);
  CHECK(partial_sum(h, 2) == 1.5);
  CHECK(partial_sum(p_series_model(), 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(partial_sum(extra_model(), 2) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(partial_sum(extra_model(), 1), DomainError);
  const auto cum = partial_sums(h, 1000);
  REQUIRE(cum.size() == 1000);
  CHECK(cum.back() == doctest::Approx(partial_sum(h, 1000)).epsilon(1e-15));
}

TEST_CASE("Euler constant enclosures") {
  const auto h = harmonic_model();
  const auto e2 = euler_constant(h, 2);
  CHECK(e2.lower == doctest::Approx(1.5 - std::log(3.0)).epsilon(1e-15));
  CHECK(e2.upper == doctest::Approx(1.5 - std::log(2.0)).epsilon(1e-15));
  const auto big = euler_constant(h, 1000000);
  CHECK(big.lower < kEulerGamma);
  CHECK(kEulerGamma < big.upper);
  CHECK(big.width() == doctest::Approx(1e-6).epsilon(1e-3));
  CHECK_THROWS_AS(euler_constant(h, 1), DomainError);
}

TEST_CASE("enclosures are nested and shrink for every registry model") {
  for (const auto& m : series_registry()) {
    CAPTURE(m.id);
    const auto s = partial_sums(m, 10000);
    int failures = 0;
    const long first = std::max<long>(2, m.start);
    for (long n = first; n < 10000; ++n) {
      const double sn = s[n - m.start];
      const double sn1 = s[n + 1 - m.start];
      const double a_n = sn - m.antiderivative(n);
      const double a_n1 = sn1 - m.antiderivative(n + 1);
      const double b_n = sn - m.antiderivative(n + 1);
      const double b_n1 = sn1 - m.antiderivative(n + 2);
      if (!(a_n1 < a_n) || !(b_n1 > b_n)) ++failures;
      if (m.antiderivative(n + 1) - m.antiderivative(n) > 2 * m.term(n)) ++failures;
    }
    CHECK(failures == 0);
    const auto e = euler_constant(m, 10000);
    const double a1 = m.term(static_cast<double>(m.start));
    CHECK(e.lower >= 0.0);
    CHECK(e.upper <= a1);
  }
}

TEST_CASE("SL bounds with explicit constants") {
  const auto h = harmonic_model();
  const auto r = sl_bounds(h, 1, kEulerGamma, 1.0);
  CHECK(r.sum == 1.0);
  CHECK(r.upper_equality);
  CHECK_FALSE(r.holds);
  CHECK(sl_bounds(h, 10, kEulerGamma, 1.0).holds);
  CHECK_FALSE(sl_bounds(h, 10, 0.63, 0.7).holds);
}

TEST_CASE("SL fixtures hold on their ranges") {
  for (const auto& fx : sl_fixtures()) {
    CAPTURE(fx.id);
    const auto model = model_by_name(fx.model);
    const auto s = partial_sums(model, 10000);
    int failures = 0;
    for (long n = std::max(fx.n_min, model.start); n <= 10000; ++n) {
      if (!eval_fixture(fx, n, s[n - model.start]).holds) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("SL equality cases at the first index") {
  const auto h = harmonic_model();
  CHECK(eval_fixture(find_fixture("eq26"), 1, 1.0).lower_equality);
  CHECK(eval_fixture(find_fixture("eq24"), 1, 1.0).upper_equality);
  CHECK(eval_fixture(find_fixture("eq25"), 1, 1.0).upper_equality);
  CHECK_FALSE(eval_fixture(find_fixture("eq24"), 2, 1.5).upper_equality);
  const double p1 = partial_sum(p_series_model(), 1);
  CHECK(eval_fixture(find_fixture("zd35"), 1, p1).lower_equality);
  CHECK(eval_fixture(find_fixture("zd36"), 1, p1).upper_equality);
  CHECK_THROWS_AS(eval_fixture(find_fixture("eq27"), 3, partial_sum(h, 3)), DomainError);
  CHECK_THROWS_AS(find_fixture("eq99"), ParameterError);
}

TEST_CASE("P-series constant decomposition") {
  CHECK(a_series_partial(1) == doctest::Approx(1.0 / (std::sqrt(2.0) * (std::sqrt(2.0) + 1.0))).epsilon(1e-14));
  CHECK(a_series_partial(10) < a_series_partial(11));
  const auto d = pn_constant_decomposition(100000);
  CHECK(std::abs(d.c1_estimate - d.c_minus_a) < 2e-5);
  CHECK(d.a_sum == doctest::Approx(a_series_total()));
  CHECK_THROWS_AS(pn_constant_decomposition(5), DomainError);
}

TEST_CASE("expansion coefficients") {
  CHECK(expansion_coefficient_A(1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(expansion_coefficient_A(2) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(expansion_coefficient_A(3) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(expansion_coefficient_A(4) == doctest::Approx(19.0 / 120.0).epsilon(1e-14));
  CHECK(expansion_coefficient_A(5) == doctest::Approx(9.0 / 20.0).epsilon(1e-14));
  CHECK_THROWS_AS(expansion_coefficient_A(0), DomainError);
}

TEST_CASE("asymptotic limits") {
  const std::vector<long> grid{1000, 10000, 100000};
  CHECK(asymptotic_limit(1, grid) == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(std::abs(asymptotic_limit(2, grid) + 1.0 / 12.0) < 1e-2);
  const auto drift = asymptotic_sequence(1, grid, kEulerGamma + 0.01);
  CHECK(std::abs(drift[2] / drift[1]) == doctest::Approx(10.0).epsilon(0.05));
  CHECK_THROWS_AS(asymptotic_limit(1, {10, 100}), ParameterError);
}

TEST_CASE("zeta continuation") {
  const double oracle = zeta::eta_from_zeta(0.5) / (1.0 - std::sqrt(2.0));
  const double v6 = zeta_continuation(0.5, 1000000);
  CHECK(std::abs(v6 + 1.4603545) < 1e-4);
  CHECK(std::abs(v6 - oracle) < 1e-6);
  const double v5 = zeta_continuation(0.5, 100000);
  const double v4 = zeta_continuation(0.5, 10000);
  CHECK(std::abs(v6 - v5) < std::abs(v5 - v4));
  CHECK_THROWS_AS(zeta_continuation(1.0, 100), DomainError);
  CHECK_THROWS_AS(zeta_continuation(0.5, 5), DomainError);
}
