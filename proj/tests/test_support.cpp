#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "ineqlab/support/compensated_sum.hpp"
#include "ineqlab/support/counter_rng.hpp"
#include "ineqlab/support/parallel.hpp"
#include "ineqlab/support/quadrature.hpp"

using namespace ineqlab::numeric;

TEST_CASE("compensated sum recovers small addends lost by naive summation") {
  CompensatedSum s;
  double naive = 0.0;
  for (double v : {1.0, 1e100, 1.0, -1e100}) {
    s += v;
    naive += v;
  }
  CHECK(s.value() == 2.0);
  CHECK(naive != 2.0);
}

TEST_CASE("compensated sums merge") {
  CompensatedSum a;
  CompensatedSum b(0.5);
  for (int i = 0; i < 10; ++i) a += 0.1;
  b += a;
  CHECK(b.value() == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("counter rng is a pure function of seed and index") {
  const CounterRng a(42);
  const CounterRng b(42);
  const CounterRng c(43);
  CHECK(a.bits(7) == b.bits(7));
  CHECK(a.bits(7) != c.bits(7));
  CHECK(a.bits(7) != a.bits(8));
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const double u = a.uniform(i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double l = a.log_uniform(i, 1e-3, 1e3);
    CHECK(l >= 1e-3);
    CHECK(l <= 1e3);
  }
}

TEST_CASE("counter rng uniform mean is close to one half") {
  const CounterRng r(1);
  CompensatedSum s;
  for (std::uint64_t i = 0; i < 100000; ++i) s += r.uniform(i);
  CHECK(s.value() / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("gauss-legendre rules are exact for polynomials of degree 2n-1") {
  const auto rule = gauss_legendre(4);
  CHECK(integrate_gauss([](double x) { return std::pow(x, 7); }, 0.0, 1.0, rule) == doctest::Approx(0.125).epsilon(1e-14));
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("adaptive quadrature integrates smooth and endpoint-singular functions") {
  const auto r = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-14);
  CHECK(r.value == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
  const auto s = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10, 0.0, 4000);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("parallel map preserves index order and rethrows worker errors") {
  const auto v = parallel_map<std::size_t>(100000, [](std::size_t i) { return i * i; });
  REQUIRE(v.size() == 100000);
  for (std::size_t i = 0; i < v.size(); i += 997) CHECK(v[i] == i * i);
  CHECK_THROWS_AS(parallel_map<int>(100000,
                                    [](std::size_t i) {
                                      if (i == 77777) throw std::runtime_error("boom");
                                      return 0;
                                    }),
                  std::runtime_error);
}
