#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ineqlab/logbounds.hpp"
#include "ineqlab/solve.hpp"

using namespace ineqlab;
using namespace ineqlab::solve;

namespace {

double eps_e(double x) { return 1.0 / std::log1p(1.0 / x) - x; }
double g_shifted(double x) { return 1.0 / std::log1p(1.0 / x) - 0.4; }

}  // namespace

TEST_CASE("bisection finds sqrt 2 and keeps a sign change in every bracket") {
  auto f = [](double x) { return x * x - 2.0; };
  const auto t = bisect(f, 1.0, 2.0, 1e-12);
  CHECK(t.converged);
  CHECK(t.root() == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(t.residual <= 1e-12);
  for (const auto& b : t.brackets) CHECK(f(b.lo) * f(b.hi) <= 0.0);
}

TEST_CASE("bisection on the shifted deviation function") {
  const auto t = bisect([](double x) { return eps_e(x) - 0.4; }, 0.1, 1.0, 1e-12);
  CHECK(t.root() == doctest::Approx(0.413053).epsilon(1e-6));
}

TEST_CASE("bisection rejects same-sign ends") {
  CHECK_THROWS_AS(bisect([](double x) { return x; }, 1.0, 2.0, 1e-12), NoBracket);
}

TEST_CASE("bisect_secant agrees with bisection") {
  auto f = [](double x) { return std::cos(x) - x; };
  CHECK(bisect_secant(f, 0.0, 1.0, 1e-14).root() == doctest::Approx(bisect(f, 0.0, 1.0, 1e-14).root()).epsilon(1e-13));
}

TEST_CASE("newton converges quadratically on a simple root") {
  const auto t = newton([](double x) { return x * x - 2.0; }, [](double x) { return 2.0 * x; }, 1.0, 1e-12);
  CHECK(t.converged);
  CHECK(t.iterations <= 6);
  CHECK(t.root() == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
  CHECK_FALSE(t.linear_tail);
}

TEST_CASE("newton flags the linear tail of a triple root") {
  const auto t = newton([](double x) { return x * x * x; }, [](double x) { return 3.0 * x * x; }, 1.0, 1e-12);
  CHECK(t.iterations > 20);
  CHECK(t.linear_tail);
}

TEST_CASE("newton reports a vanishing derivative") {
  CHECK_THROWS_AS(newton([](double x) { return x * x + 1.0; }, [](double x) { return 2.0 * x; }, 0.0, 1e-12),
                  DerivativeZero);
}

TEST_CASE("newton solves the Young critical equation") {
  const double p = 4.0;
  const double q = p / (p - 1.0);
  auto h = [&](double t) { return std::pow(t, p) / p - std::pow(t, q) / q; };
  auto f = [&](double t) { return h(t) - h(0.5); };
  auto df = [&](double t) { return std::pow(t, p - 1.0) - std::pow(t, q - 1.0); };
  const auto t = newton(f, df, 1.3, 1e-14);
  CHECK(t.root() == doctest::Approx(1.35485).epsilon(1e-5));
}

TEST_CASE("newton and bisection agree on shared problems") {
  auto f = [](double x) { return eps_e(x) - 0.4; };
  auto df = [&](double x) { return (f(x + 1e-7) - f(x - 1e-7)) / 2e-7; };
  CHECK(newton(f, df, 0.5, 1e-13).root() == doctest::Approx(bisect(f, 0.1, 1.0, 1e-13).root()).epsilon(1e-10));
}

TEST_CASE("accelerated iteration converges in a handful of steps") {
  const auto t = fixed_point(g_shifted, 1.0, -7.47, 1e-6, 50);
  CHECK(t.status == SolveStatus::Converged);
  CHECK(t.iterations <= 10);
  CHECK(t.root() == doctest::Approx(0.413053).epsilon(1e-5));
}

TEST_CASE("plain iteration of the same map does not converge") {
  const auto t = fixed_point(g_shifted, 1.0, 1.0, 1e-6, 50);
  CHECK(t.status != SolveStatus::Converged);
}

TEST_CASE("inverse-route iteration converges slowly") {
  auto g_inv = [](double x) { return 1.0 / std::expm1(1.0 / (x + 0.4)); };
  const auto quick = fixed_point(g_inv, 1.0, 1.0, 1e-4, 49);
  CHECK(quick.status == SolveStatus::NoConvergence);
  const auto t = fixed_point(g_inv, 1.0, 1.0, 1e-4, 1000);
  CHECK(t.status == SolveStatus::Converged);
  CHECK(t.iterations >= 50);
  CHECK(t.root() == doctest::Approx(0.413053).epsilon(1e-2));
}

TEST_CASE("leaving the hull is divergence") {
  const auto t = fixed_point([](double x) { return 3.0 * x; }, 1.0, 1.0, 1e-12, 1000);
  CHECK(t.status == SolveStatus::Divergence);
  CHECK(t.iterations < 100);
}

TEST_CASE("optimal lambda") {
  const double root = bisect([](double x) { return g_shifted(x) - x; }, 0.1, 1.0, 1e-14).root();
  CHECK(optimal_lambda(g_shifted, root) == doctest::Approx(-7.5).epsilon(0.5 / 7.5));
  CHECK(optimal_lambda([](double x) { return x / 2.0; }, 3.0) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK_THROWS_AS(optimal_lambda([](double x) { return x + 1.0; }, 1.0), DerivativeSingular);
}

TEST_CASE("optimal lambda gives superlinear local convergence") {
  const double root = bisect([](double x) { return g_shifted(x) - x; }, 0.1, 1.0, 1e-15).root();
  const double lambda = optimal_lambda(g_shifted, root);
  const auto t = fixed_point(g_shifted, 0.45, lambda, 1e-15, 20);
  REQUIRE(t.iterates.size() >= 3);
  const double e0 = std::abs(t.iterates[0] - root);
  const double e1 = std::abs(t.iterates[1] - root);
  const double e2 = std::abs(t.iterates[2] - root);
  CHECK(e1 / (e0 * e0) < 100.0);
  CHECK(e2 / (e1 * e1) < 100.0);
}
