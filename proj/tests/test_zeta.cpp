#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ineqlab/zeta.hpp"

using namespace ineqlab;
using namespace ineqlab::zeta;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Bernoulli numbers are exact") {
  const auto b = bernoulli(60);
  CHECK(b[0] == Rational(1));
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[3] == Rational(0));
  CHECK(b[4] == Rational(-1, 30));
  CHECK(b[12] == Rational(-691, 2730));
  for (int k = 3; k <= 59; k += 2) CHECK(b[k] == 0);
  CHECK(b.as_string(4) == "-1/30");
  CHECK(b.as_double(2) == doctest::Approx(1.0 / 6.0));
  CHECK(boost::multiprecision::numerator(b[60]) ==
        boost::multiprecision::cpp_int("-1215233140483755572040304994079820246041491"));
  CHECK_THROWS_AS(bernoulli(61), RangeError);
}

TEST_CASE("generating function partial sums") {
  const auto b = bernoulli(20);
  for (double x : {0.05, 0.1, 0.2}) {
    CHECK(std::abs(bernoulli_generating_partial(b, 10, x) - x / std::expm1(x)) < 1e-12);
  }
}

TEST_CASE("even zeta and eta values") {
  CHECK(zeta_even(1) == doctest::Approx(kPi * kPi / 6).epsilon(1e-15));
  CHECK(zeta_even(2) == doctest::Approx(std::pow(kPi, 4) / 90).epsilon(1e-15));
  CHECK(eta_even(1) == doctest::Approx(kPi * kPi / 12).epsilon(1e-15));
  CHECK(zeta_even(30) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(zeta_even(0), RangeError);
  CHECK_THROWS_AS(eta_even(31), RangeError);
  CHECK(zeta_even(1) * (1 - 0.25) == doctest::Approx(kPi * kPi / 8).epsilon(1e-14));
  CHECK(zeta_even(2) * (1 - 1.0 / 16) == doctest::Approx(std::pow(kPi, 4) / 96).epsilon(1e-14));
}

TEST_CASE("closed forms agree with direct summation") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto d = zeta_direct(2.0 * n, 10000);
    CHECK(std::abs(d.value - zeta_even(n)) < 1e-10);
    double alt = 0.0;
    for (long k = 20000; k >= 1; --k) alt += ((k % 2) ? 1.0 : -1.0) * std::pow(static_cast<double>(k), -2.0 * n);
    CHECK(std::abs(alt - eta_even(n)) < 1e-8);
  }
}

TEST_CASE("direct zeta summation") {
  const auto z2 = zeta_direct(2.0, 10000);
  CHECK(std::abs(z2.value - 1.64493407) < 1e-8);
  CHECK(z2.error < 1e-11);
  CHECK(std::abs(zeta_direct(3.0, 10000).value - 1.20205690) < 1e-8);
  CHECK(std::abs(zeta_direct(10.0, 100).value - zeta_even(5)) < 1e-12);
  CHECK(std::abs(zeta_real(2.0) - zeta_even(1)) < 1e-14);
  CHECK(std::abs(zeta_real(3.0) - zeta_direct(3.0, 10000).value) < 1e-12);
}

TEST_CASE("eta routes") {
  CHECK(std::abs(eta_direct(1.0, 1000000) - std::numbers::ln2) < 1e-6);
  CHECK(eta_from_zeta(2.0) == doctest::Approx(kPi * kPi / 12).epsilon(1e-14));
  CHECK(std::abs(eta_from_zeta(2.0) - eta_direct(2.0, 100000)) < 1e-8);
  CHECK(std::abs(eta_from_zeta(3.5) - eta_direct(3.5, 100000)) < 1e-8);
  CHECK_THROWS_AS(eta_from_zeta(1.0), DomainError);
  CHECK_THROWS_AS(eta_from_zeta(0.0), DomainError);
  CHECK(eta_from_zeta(0.5) == doctest::Approx(0.6048986434216).epsilon(1e-9));
}
