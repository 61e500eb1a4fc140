#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "ineqlab/means.hpp"
#include "ineqlab/support/counter_rng.hpp"

using namespace ineqlab;
using namespace ineqlab::means;

namespace {

double ev(const MeanSpec& m, double x, double y) { return mean_eval(m, x, y).value; }

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }

std::vector<MeanSpec> sample_specs() {
  return {MeanSpec::power(1.0),     MeanSpec::power(0.0),     MeanSpec::power(-1.0),   MeanSpec::power(2.5),
          MeanSpec::power(INFINITY), MeanSpec::power(-INFINITY), MeanSpec::rado(1.0),    MeanSpec::rado(0.0),
          MeanSpec::rado(-1.0),      MeanSpec::rado(-2.0),     MeanSpec::rado(-3.5),    MeanSpec::rado(0.5),
          MeanSpec::gini(2.0, 1.0),  MeanSpec::gini(0.0, 0.0), MeanSpec::gini(1.5, 1.5), MeanSpec::lehmer(0.0),
          MeanSpec::lehmer(2.0),     MeanSpec::heron(),        MeanSpec::weighted_arith(0.3, 0.7),
          MeanSpec::weighted_geom(0.3, 0.7), MeanSpec::quasi("sq"),
          MeanSpec::iterated(MeanSpec::power(1.0), MeanSpec::power(0.0))};
}

}  // namespace

TEST_CASE("closed-form values of the basic families") {
  CHECK(ev(MeanSpec::power(1.0), 2, 4) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(ev(MeanSpec::power(0.0), 2, 8) == 4.0);
  CHECK(ev(MeanSpec::rado(1.0), 2, 4) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(ev(MeanSpec::rado(-2.0), 4, 9) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(ev(MeanSpec::rado(-1.0), 1, std::numbers::e) == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
  CHECK(ev(MeanSpec::heron(), 1, 4) == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
  CHECK(ev(MeanSpec::lehmer(0.0), 3, 5) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(ev(MeanSpec::gini(0.0, 0.0), 4, 9) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(ev(MeanSpec::power(INFINITY), 2, 9) == 9.0);
  CHECK(ev(MeanSpec::power(-INFINITY), 2, 9) == 2.0);
}

TEST_CASE("identric mean closed form") {
  const double x = 2.0;
  const double y = 5.0;
  const double expected = std::exp((y * std::log(y) - x * std::log(x)) / (y - x) - 1.0);
  CHECK(ev(MeanSpec::rado(0.0), x, y) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(mean_eval(MeanSpec::rado(0.0), x, y).branch == Branch::LimitCase);
}

TEST_CASE("near-diagonal and near-parameter limits are continuous") {
  const double x = 3.0;
  const double y = 3.0 * (1.0 + 1e-10);
  for (double beta : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
    const double v = ev(MeanSpec::rado(beta), x, y);
    CHECK(v >= x);
    CHECK(v <= y);
  }
  CHECK(rel_close(ev(MeanSpec::power(1e-9), 2, 8), 4.0, 1e-9));
  CHECK(rel_close(ev(MeanSpec::rado(1e-9), 2, 8), ev(MeanSpec::rado(0.0), 2, 8), 1e-8));
  CHECK(rel_close(ev(MeanSpec::rado(-1.0 + 1e-9), 2, 8), ev(MeanSpec::rado(-1.0), 2, 8), 1e-8));
  CHECK(rel_close(ev(MeanSpec::rado(1e-6), 2, 8), rado_generic(1e-6, 2, 8), 1e-8));
}

TEST_CASE("generic Rado branch refuses the closed-form parameters") {
  CHECK_THROWS_AS(rado_generic(0.0, 2, 3), ParameterError);
  CHECK_THROWS_AS(rado_generic(-1.0, 2, 3), ParameterError);
}

TEST_CASE("zero arguments") {
  CHECK(ev(MeanSpec::power(1.0), 0, 4) == 2.0);
  CHECK(ev(MeanSpec::power(0.0), 0, 4) == 0.0);
  CHECK_THROWS_AS(mean_eval(MeanSpec::power(-1.0), 0, 4), DomainError);
  CHECK_THROWS_AS(mean_eval(MeanSpec::rado(-1.0), 0, 4), DomainError);
  CHECK_THROWS_AS(mean_eval(MeanSpec::power(1.0), -1, 4), DomainError);
}

TEST_CASE("weights must be a probability vector") {
  CHECK_THROWS_AS(mean_eval(MeanSpec::weighted_arith(0.5, 0.6), 1, 2), ParameterError);
  CHECK(ev(MeanSpec::weighted_arith(0.25, 0.75), 4, 8) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(ev(MeanSpec::weighted_geom(0.5, 0.5), 4, 9) == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("conjugate means") {
  CHECK(mean_conjugate(MeanSpec::power(2.0), 5, 5) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(mean_conjugate(MeanSpec::power(0.0), 4, 9) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(rel_close(mean_conjugate(MeanSpec::power(1.0), 2, 4), ev(MeanSpec::power(-1.0), 2, 4), 1e-12));
  CHECK_THROWS_AS(mean_conjugate(MeanSpec::power(1.0), 0, 4), DomainError);
}

TEST_CASE("quasi-arithmetic means") {
  CHECK(quasi_arithmetic_eval(generator_by_name("id"), {0.5, 0.5}, {2, 4}) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(quasi_arithmetic_eval(generator_by_name("ln"), {0.5, 0.5}, {2, 8}) ==
        doctest::Approx(ev(MeanSpec::power(0.0), 2, 8)).epsilon(1e-13));
  CHECK(quasi_arithmetic_eval(generator_by_name("exp"), {1.0}, {7}) == doctest::Approx(7.0).epsilon(1e-13));
  CHECK(quasi_arithmetic_eval(generator_by_name("pow:3"), {0.5, 0.5}, {1, 2}) ==
        doctest::Approx(std::cbrt(4.5)).epsilon(1e-12));
  Generator bumpy{"bumpy", [](double x) { return std::sin(x); }, {}};
  CHECK_THROWS_AS(quasi_arithmetic_eval(bumpy, {0.5, 0.5}, {0.5, 3.0}), GeneratorError);
  CHECK_THROWS_AS(generator_by_name("nope"), ParameterError);
}

TEST_CASE("iterated means") {
  const auto a = MeanSpec::power(1.0);
  const auto g = MeanSpec::power(0.0);
  const auto h = MeanSpec::power(-1.0);
  const auto fixed = iterate_mean(a, g, 1, 1, 1e-15);
  CHECK(fixed.mu == 1.0);
  CHECK(fixed.iterations == 0);
  CHECK(rel_close(iterate_mean(a, g, 1, 0.5, 1e-15).mu, agm_closed_form(1, 0.5), 1e-12));
  CHECK(rel_close(iterate_mean(a, h, 2, 8, 1e-15).mu, 4.0, 1e-12));
  CHECK(iterate_mean(a, g, 1e3, 1e-3, 1e-15).iterations < 10);
}

TEST_CASE("complete elliptic integral") {
  CHECK(elliptic_K(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  const double k = std::sqrt(0.75);
  CHECK(rel_close(std::numbers::pi / 2 / elliptic_K(k), iterate_mean(MeanSpec::power(1), MeanSpec::power(0), 1, 0.5, 1e-15).mu,
                  1e-11));
  const double big = elliptic_K(0.999999);
  CHECK(std::isfinite(big));
  CHECK(big > 7.0);
  CHECK_THROWS_AS(elliptic_K(1.0), DomainError);
}

TEST_CASE("profile function") {
  for (const auto& m : sample_specs()) {
    if (!m.symmetric()) continue;
    CHECK(mean_profile_h(m, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  }
  for (double t : {-3.0, 0.7, 5.0}) CHECK(mean_profile_h(MeanSpec::power(1.0), t) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(mean_profile_h(MeanSpec::power(0.0), 2.0) == doctest::Approx(mean_profile_h(MeanSpec::power(0.0), -2.0)).epsilon(1e-14));
}

TEST_CASE("mean axioms on random pairs") {
  const numeric::CounterRng rng(11);
  for (const auto& m : sample_specs()) {
    CAPTURE(m.name());
    int failures = 0;
    for (std::uint64_t i = 0; i < 2000; ++i) {
      const double x = rng.log_uniform(2 * i, 1e-3, 1e3);
      const double y = rng.log_uniform(2 * i + 1, 1e-3, 1e3);
      const double v = ev(m, x, y);
      if (!(v >= std::min(x, y) * (1 - 1e-12) && v <= std::max(x, y) * (1 + 1e-12))) ++failures;
      if (!rel_close(ev(m, x, x), x, 1e-12)) ++failures;
      for (double lam : {1e-3, 1e3}) {
        if (!rel_close(ev(m, lam * x, lam * y), lam * v, 1e-10)) ++failures;
      }
      if (m.symmetric() && !rel_close(ev(m, y, x), v, 1e-12)) ++failures;
      const double lo = std::min(x, y);
      const double hi = std::max(x, y);
      if (hi > lo * 1.01 && ev(m, lo, hi * 1.01) < ev(m, lo, hi)) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("power and Rado scales are ordered in the parameter") {
  const numeric::CounterRng rng(5);
  const std::vector<double> alphas{-INFINITY, -4, -1, -0.5, 0, 1.0 / 3, 0.5, 1, 2, 7, INFINITY};
  const std::vector<double> betas{-6, -2, -1, -0.5, 0, 0.5, 1, 3};
  int failures = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const double x = rng.log_uniform(2 * i, 1e-3, 1e3);
    const double y = rng.log_uniform(2 * i + 1, 1e-3, 1e3);
    for (std::size_t k = 1; k < alphas.size(); ++k) {
      if (ev(MeanSpec::power(alphas[k]), x, y) < ev(MeanSpec::power(alphas[k - 1]), x, y) * (1 - 1e-12)) ++failures;
    }
    for (std::size_t k = 1; k < betas.size(); ++k) {
      if (ev(MeanSpec::rado(betas[k]), x, y) < ev(MeanSpec::rado(betas[k - 1]), x, y) * (1 - 1e-12)) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("conjugation is an involution and matches the reciprocal form for Rado means") {
  const numeric::CounterRng rng(9);
  int failures = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const double x = rng.log_uniform(2 * i, 1e-3, 1e3);
    const double y = rng.log_uniform(2 * i + 1, 1e-3, 1e3);
    for (const auto& m : {MeanSpec::power(0.7), MeanSpec::rado(-1.0), MeanSpec::rado(0.0), MeanSpec::heron()}) {
      const double once = mean_conjugate(m, x, y);
      if (!rel_close(x * y / once, ev(m, x, y), 1e-12)) ++failures;
    }
    for (double beta : {-3.0, -1.0, 0.0, 2.0}) {
      const double lhs = mean_conjugate(MeanSpec::rado(beta), x, y);
      const double rhs = 1.0 / ev(MeanSpec::rado(beta), 1.0 / x, 1.0 / y);
      if (!rel_close(lhs, rhs, 1e-12)) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("logarithmic and identric means sit between the stated power means") {
  const numeric::CounterRng rng(21);
  int failures = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const double x = rng.log_uniform(2 * i, 1e-3, 1e3);
    const double y = rng.log_uniform(2 * i + 1, 1e-3, 1e3);
    const double tol = 1e-12;
    const double l = ev(MeanSpec::rado(-1.0), x, y);
    const double i0 = ev(MeanSpec::rado(0.0), x, y);
    if (ev(MeanSpec::power(0.0), x, y) > l * (1 + tol)) ++failures;
    if (l > ev(MeanSpec::power(1.0 / 3.0), x, y) * (1 + tol)) ++failures;
    if (ev(MeanSpec::power(2.0 / 3.0), x, y) > i0 * (1 + tol)) ++failures;
    if (i0 > ev(MeanSpec::power(std::numbers::ln2), x, y) * (1 + tol)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("coincidences between the power and Rado scales") {
  const numeric::CounterRng rng(3);
  for (std::uint64_t i = 0; i < 500; ++i) {
    const double x = rng.log_uniform(2 * i, 1e-3, 1e3);
    const double y = rng.log_uniform(2 * i + 1, 1e-3, 1e3);
    CHECK(rel_close(ev(MeanSpec::power(0.5), x, y), ev(MeanSpec::rado(-0.5), x, y), 1e-12));
    CHECK(rel_close(ev(MeanSpec::power(1.0), x, y), ev(MeanSpec::rado(1.0), x, y), 1e-12));
    CHECK(rel_close(ev(MeanSpec::power(0.0), x, y), ev(MeanSpec::rado(-2.0), x, y), 1e-12));
    CHECK(ev(MeanSpec::power(INFINITY), x, y) == ev(MeanSpec::rado(INFINITY), x, y));
    CHECK(ev(MeanSpec::power(-INFINITY), x, y) == ev(MeanSpec::rado(-INFINITY), x, y));
  }
}

TEST_CASE("AGM lies between the logarithmic mean and the half power mean") {
  const numeric::CounterRng rng(8);
  const auto a = MeanSpec::power(1.0);
  const auto g = MeanSpec::power(0.0);
  int failures = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const double x = rng.log_uniform(2 * i, 1e-3, 1e3);
    const double y = rng.log_uniform(2 * i + 1, 1e-3, 1e3);
    const double mu = iterate_mean(a, g, x, y, 1e-15).mu;
    if (ev(MeanSpec::rado(-1.0), x, y) > mu * (1 + 1e-12)) ++failures;
    if (mu > ev(MeanSpec::power(0.5), x, y) * (1 + 1e-12)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("Rado branch exponents") {
  CHECK(rado_branch(-3.0).lower_exponent == doctest::Approx(-1.0 / 3.0));
  CHECK(rado_branch(-3.0).upper_exponent == 0.0);
  CHECK(rado_branch(0.0).lower_exponent == doctest::Approx(2.0 / 3.0));
  CHECK(rado_branch(0.0).upper_exponent == doctest::Approx(std::numbers::ln2));
  const auto one = rado_branch(1.0);
  CHECK(one.lower_exponent == doctest::Approx(1.0));
  CHECK(one.upper_exponent == doctest::Approx(1.0));
}

TEST_CASE("Rado bounds certify on every branch") {
  for (double alpha : {-3.0, -1.5, -0.75, 0.0, 0.5, 1.0, 2.0}) {
    CAPTURE(alpha);
    const auto c = check_rado_bounds(alpha, 10000, 1);
    CHECK(c.holds);
    CHECK(c.samples == 10000);
  }
}
