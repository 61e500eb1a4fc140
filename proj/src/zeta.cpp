#include "ineqlab/zeta.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "ineqlab/support/compensated_sum.hpp"

namespace ineqlab::zeta {

double BernoulliTable::as_double(std::size_t i) const { return static_cast<double>(values.at(i)); }

std::string BernoulliTable::as_string(std::size_t i) const {
  const auto& v = values.at(i);
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

BernoulliTable bernoulli(int upto) {
  if (upto < 0) throw RangeError("bernoulli: index must be non-negative");
  if (upto > kMaxBernoulliIndex) {
    throw RangeError(fmt::format("bernoulli: index {} exceeds {}", upto, kMaxBernoulliIndex));
  }
  using boost::multiprecision::cpp_int;
  BernoulliTable t;
  t.values.reserve(static_cast<std::size_t>(upto) + 1);
  t.values.emplace_back(1);
  for (int m = 1; m <= upto; ++m) {
    if (m > 1 && m % 2 == 1) {
      t.values.emplace_back(0);
      continue;
    }
    Rational acc = 0;
    cpp_int binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * t.values[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    t.values.push_back(-acc / (m + 1));
  }
  return t;
}

double bernoulli_generating_partial(const BernoulliTable& table, int m, double x) {
  if (2 * m >= static_cast<int>(table.values.size())) throw RangeError("bernoulli table too short");
  numeric::CompensatedSum s(1.0 - 0.5 * x);
  double power = 1.0;
  double fact = 1.0;
  for (int k = 1; k <= m; ++k) {
    power *= x * x;
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    s += table.as_double(static_cast<std::size_t>(2 * k)) * power / fact;
  }
  return s.value();
}

namespace {

const BernoulliTable& shared_table() {
  static const BernoulliTable table = bernoulli(kMaxBernoulliIndex);
  return table;
}

// pi^2n |B_2n| / (2n)!
double even_core(int n) {
  if (n < 1 || n > 30) throw RangeError(fmt::format("even zeta index {} outside [1, 30]", n));
  const double b = std::abs(shared_table().as_double(static_cast<std::size_t>(2 * n)));
  return std::exp(2.0 * n * std::log(std::numbers::pi) - std::lgamma(2.0 * n + 1.0)) * b;
}

}  // namespace

double zeta_even(int n) { return std::ldexp(even_core(n), 2 * n - 1); }

double eta_even(int n) { return (std::ldexp(1.0, 2 * n - 1) - 1.0) * even_core(n); }

double zeta_real(double s) {
  if (!(s > 1.0)) throw DomainError(fmt::format("zeta_real needs s > 1, got {}", s));
  constexpr int kN = 20;
  constexpr int kTerms = 10;
  const double n = kN;
  numeric::CompensatedSum sum;
  for (int k = kN - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  sum += std::pow(n, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(n, -s);
  // B_2j/(2j)! * s(s+1)...(s+2j-2) n^(-s-2j+1)
  const auto& table = shared_table();
  double rising = s;  // s(s+1)...(s+2j-2)
  double fact = 2.0;
  for (int j = 1; j <= kTerms; ++j) {
    if (j > 1) {
      rising *= (s + 2.0 * j - 3.0) * (s + 2.0 * j - 2.0);
      fact *= (2.0 * j - 1.0) * (2.0 * j);
    }
    sum += table.as_double(static_cast<std::size_t>(2 * j)) / fact * rising * std::pow(n, -s - 2.0 * j + 1.0);
  }
  return sum.value();
}

double eta_from_zeta(double a) {
  if (!(a > 0.0)) throw DomainError(fmt::format("eta_from_zeta needs a > 0, got {}", a));
  if (a == 1.0) throw DomainError("eta_from_zeta is singular at a = 1; the value there is ln 2");
  if (a > 1.0) return -std::expm1((1.0 - a) * std::numbers::ln2) * zeta_real(a);
  // 0 < a < 1: the alternating series still converges.
  return eta_direct(a, 1000000);
}

double eta_direct(double a, long terms) {
  if (!(a > 0.0)) throw DomainError(fmt::format("eta_direct needs a > 0, got {}", a));
  if (terms < 2) throw DomainError("eta_direct needs at least 2 terms");
  // Pair consecutive terms so the summands are positive.
  numeric::CompensatedSum s;
  long k = 1;
  for (; k + 1 <= terms - 1; k += 2) {
    const auto x = static_cast<double>(k);
    s += std::pow(x, -a) - std::pow(x + 1.0, -a);
  }
  // s now holds the partial sum through an even index k-1; finish to terms-1.
  double prev = s.value();
  if (k <= terms - 1) prev += std::pow(static_cast<double>(k), -a);
  const double sign = (terms % 2 == 1) ? 1.0 : -1.0;
  const double last = prev + sign * std::pow(static_cast<double>(terms), -a);
  return 0.5 * (prev + last);
}

ZetaEstimate zeta_direct(double s, long terms) {
  if (!(s > 1.0)) throw DomainError(fmt::format("zeta_direct needs s > 1, got {}", s));
  if (terms < 1) throw DomainError("zeta_direct needs at least 1 term");
  numeric::CompensatedSum sum;
  for (long k = terms; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  const auto n = static_cast<double>(terms);
  sum += std::pow(n, 1.0 - s) / (s - 1.0);
  sum += -0.5 * std::pow(n, -s);
  return {sum.value(), s / 12.0 * std::pow(n, -s - 1.0)};
}

}  // namespace ineqlab::zeta
