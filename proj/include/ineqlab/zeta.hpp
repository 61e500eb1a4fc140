#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "ineqlab/errors.hpp"

namespace ineqlab::zeta {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxBernoulliIndex = 60;

/// B_0..B_n with B_1 = -1/2.
struct BernoulliTable {
  std::vector<Rational> values;

  [[nodiscard]] const Rational& operator[](std::size_t i) const { return values.at(i); }
  [[nodiscard]] double as_double(std::size_t i) const;
  [[nodiscard]] std::string as_string(std::size_t i) const;
};

/// Exact table up to index upto (<= 60), from sum_{j<m} C(m+1, j) B_j = -(m+1) B_m.
BernoulliTable bernoulli(int upto);

/// 1 - x/2 + sum_{k<=m} B_2k x^2k / (2k)!.
double bernoulli_generating_partial(const BernoulliTable& table, int m, double x);

/// sum 1/k^2n = 2^(2n-1) pi^2n |B_2n| / (2n)!, 1 <= n <= 30.
double zeta_even(int n);
/// sum (-1)^(k+1)/k^2n = (2^(2n-1) - 1) pi^2n |B_2n| / (2n)!.
double eta_even(int n);

/// Riemann zeta for real s > 1 by Euler-Maclaurin.
double zeta_real(double s);

/// (1 - 2^(1-a)) zeta(a) for a > 0, a != 1.
double eta_from_zeta(double a);

/// Alternating series, average of the last two partial sums.
double eta_direct(double a, long terms);

struct ZetaEstimate {
  double value = 0.0;
  double error = 0.0;
};

/// sum_{k<=n} k^-s + n^(1-s)/(s-1) - n^-s/2; error is s n^(-s-1)/12.
ZetaEstimate zeta_direct(double s, long terms);

}  // namespace ineqlab::zeta
