#include "ineqlab/classic.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <functional>

#include "ineqlab/solve.hpp"
#include "ineqlab/support/compensated_sum.hpp"

namespace ineqlab::classic {
namespace {

void check_lengths(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size()) {
    throw LengthMismatch(fmt::format("vector lengths differ: {} vs {}", u.size(), v.size()));
  }
  if (u.empty()) throw ParameterError("vectors must be non-empty");
}

VectorCheck finish(double lhs, double rhs) {
  VectorCheck c;
  c.lhs = lhs;
  c.rhs = rhs;
  c.holds = lhs <= rhs + 1e-12 * std::abs(rhs);
  c.equality = std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs);
  return c;
}

}  // namespace

VectorCheck cauchy_bunyakovsky(const std::vector<double>& u, const std::vector<double>& v) {
  check_lengths(u, v);
  numeric::CompensatedSum uv;
  numeric::CompensatedSum uu;
  numeric::CompensatedSum vv;
  for (std::size_t i = 0; i < u.size(); ++i) {
    uv += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  return finish(std::abs(uv.value()), std::sqrt(uu.value()) * std::sqrt(vv.value()));
}

VectorCheck minkowski(const std::vector<double>& u, const std::vector<double>& v) {
  check_lengths(u, v);
  numeric::CompensatedSum ww;
  numeric::CompensatedSum uu;
  numeric::CompensatedSum vv;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double w = u[i] + v[i];
    ww += w * w;
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  return finish(std::sqrt(ww.value()), std::sqrt(uu.value()) + std::sqrt(vv.value()));
}

namespace {

// ||w||_r scaled by max |w_i|, so exponents near 1 or in the thousands
// neither overflow nor underflow.
double norm_p(const std::vector<double>& w, double r) {
  double m = 0.0;
  for (double x : w) m = std::max(m, std::abs(x));
  if (m == 0.0) return 0.0;
  numeric::CompensatedSum s;
  for (double x : w) s += std::pow(std::abs(x) / m, r);
  return m * std::pow(s.value(), 1.0 / r);
}

}  // namespace

VectorCheck holder(const std::vector<double>& u, const std::vector<double>& v, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError(fmt::format("holder needs finite p > 1, got {}", p));
  check_lengths(u, v);
  if (p == 2.0) return cauchy_bunyakovsky(u, v);
  const double q = p / (p - 1.0);
  numeric::CompensatedSum uv;
  for (std::size_t i = 0; i < u.size(); ++i) uv += u[i] * v[i];
  return finish(std::abs(uv.value()), norm_p(u, p) * norm_p(v, q));
}

const char* to_string(YoungBetter b) {
  switch (b) {
    case YoungBetter::PQ: return "PQ";
    case YoungBetter::QP: return "QP";
    case YoungBetter::Tie: return "Tie";
  }
  return "?";
}

const char* to_string(YoungCase c) {
  switch (c) {
    case YoungCase::BothAtLeastOne: return "BothAtLeastOne";
    case YoungCase::BothAtMostOne: return "BothAtMostOne";
    case YoungCase::Straddle: return "Straddle";
  }
  return "?";
}

double young_h(double t, double p) {
  const double q = p / (p - 1.0);
  return std::pow(t, p) / p - std::pow(t, q) / q;
}

double young_critical(double x, double p, double hint) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError(fmt::format("young needs finite p > 1, got {}", p));
  if (p == 2.0) throw ParameterError("p = 2: both Young bounds coincide, no critical point");
  if (!(x > 0.0 && x < 1.0)) throw ParameterError(fmt::format("critical point needs 0 < x < 1, got {}", x));
  const double q = p / (p - 1.0);
  const double target = young_h(x, p);
  auto f = [&](double t) { return young_h(t, p) - target; };
  auto df = [&](double t) { return std::pow(t, p - 1.0) - std::pow(t, q - 1.0); };
  double lo = 1.0;
  double hi = std::max(hint, 10.0);
  while (std::signbit(f(lo)) == std::signbit(f(hi))) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(f(hi))) throw NoBracket("young_critical: no sign change before overflow");
  }
  try {
    const auto trace = solve::newton(f, df, hi, 1e-15 * hi, 100);
    const double r = trace.root();
    if (trace.converged && r >= lo && r <= hi && std::abs(f(r)) <= 1e-12 * (1.0 + std::abs(target))) return r;
  } catch (const Error&) {
  }
  return solve::bisect(f, lo, hi, 1e-15 * hi).root();
}

YoungVerdict young_compare(double x, double y, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError(fmt::format("young needs finite p > 1, got {}", p));
  if (!(x >= 0.0) || !(y >= 0.0)) throw ParameterError("young needs x, y >= 0");
  YoungVerdict v;
  v.x = x;
  v.y = y;
  v.p = p;
  v.q = p / (p - 1.0);
  v.product = x * y;
  v.rhs_pq = std::pow(x, p) / p + std::pow(y, v.q) / v.q;
  v.rhs_qp = std::pow(x, v.q) / v.q + std::pow(y, p) / p;
  const double scale = std::max(std::abs(v.rhs_pq), std::abs(v.rhs_qp));
  if (std::abs(v.rhs_pq - v.rhs_qp) <= 1e-12 * scale) {
    v.better = YoungBetter::Tie;
  } else {
    v.better = v.rhs_pq < v.rhs_qp ? YoungBetter::PQ : YoungBetter::QP;
  }
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (lo >= 1.0) {
    v.young_case = YoungCase::BothAtLeastOne;
  } else if (hi <= 1.0) {
    v.young_case = YoungCase::BothAtMostOne;
  } else {
    v.young_case = YoungCase::Straddle;
    if (p != 2.0 && lo > 0.0) v.y_cr = young_critical(lo, p, hi);
  }
  return v;
}

namespace {

InductionCheck run_check(std::string id, std::string formula, long n_lo, long n_hi, bool strict,
                         const std::function<std::pair<double, double>(long)>& sides) {
  if (n_lo < 1 || n_hi < n_lo) throw DomainError("induction check needs 1 <= n_lo <= n_hi");
  InductionCheck c{std::move(id), std::move(formula), n_lo, n_hi, 0, INFINITY, n_lo};
  for (long n = n_lo; n <= n_hi; ++n) {
    const auto [lhs, rhs] = sides(n);
    const double margin = rhs - lhs;
    const bool ok = strict ? margin > 0.0 : margin >= -1e-12 * (std::abs(lhs) + std::abs(rhs));
    if (!ok) ++c.violations;
    if (margin < c.worst_margin) {
      c.worst_margin = margin;
      c.worst_n = n;
    }
  }
  return c;
}

}  // namespace

InductionCheck factorial_half_power(long n_lo, long n_hi) {
  return run_check("mmi1a", "n! < (n/2)^n", n_lo, n_hi, true, [](long n) {
    const auto x = static_cast<double>(n);
    return std::pair{std::lgamma(x + 1.0), x * std::log(x / 2.0)};
  });
}

InductionCheck inverse_squares(long n_lo, long n_hi) {
  numeric::CompensatedSum s;
  long next = 1;
  return run_check("mmi3a", "sum 1/k^2 <= 2 - 1/n", n_lo, n_hi, false, [&](long n) {
    for (; next <= n; ++next) s += 1.0 / (static_cast<double>(next) * static_cast<double>(next));
    return std::pair{s.value(), 2.0 - 1.0 / static_cast<double>(n)};
  });
}

InductionCheck odd_even_product(long n_lo, long n_hi) {
  double prod = 1.0;
  long next = 1;
  return run_check("mmi4b", "(1/2)(3/4)...((2n-1)/(2n)) <= 1/sqrt(3n+1)", n_lo, n_hi, false, [&](long n) {
    for (; next <= n; ++next) prod *= (2.0 * next - 1.0) / (2.0 * next);
    return std::pair{prod, 1.0 / std::sqrt(3.0 * static_cast<double>(n) + 1.0)};
  });
}

}  // namespace ineqlab::classic
