#include "ineqlab/sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <fmt/format.h>
#include <numbers>

#include "ineqlab/support/compensated_sum.hpp"
#include "ineqlab/support/quadrature.hpp"

namespace ineqlab::sums {
namespace {

constexpr double kEuler = std::numbers::egamma;

double parse_param(const std::string& name, std::size_t offset) {
  try {
    std::size_t used = 0;
    const double v = std::stod(name.substr(offset), &used);
    if (used != name.size() - offset) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParameterError(fmt::format("bad series parameter in '{}'", name));
  }
}

}  // namespace

SeriesModel make_model(std::string id, ScalarFn term, ScalarFn antiderivative, long start, std::vector<double> params,
                       bool divergent, std::string description) {
  if (start < 1) throw ConstructionError("series must start at k >= 1");
  const auto s = static_cast<double>(start);
  if (std::abs(antiderivative(s)) > 1e-14) {
    throw ConstructionError(fmt::format("{}: F(start) = {} is not 0", id, antiderivative(s)));
  }
  // Log-spaced probe points from start to start * 10^6.
  for (int i = 0; i <= 60; ++i) {
    const double k = std::round(s * std::pow(10.0, i / 10.0));
    const double fk = term(k);
    const double fk1 = term(k + 1.0);
    if (!(fk > 0.0) || !std::isfinite(fk)) {
      throw ConstructionError(fmt::format("{}: term f({}) = {} is not positive", id, k, fk));
    }
    if (!(fk1 < fk)) {
      throw ConstructionError(fmt::format("{}: term is not strictly decreasing at k = {}", id, k));
    }
    const double x = k + 0.5;
    const double h = 1e-6 * x;
    const double up = antiderivative(x + h);
    const double down = antiderivative(x - h);
    const double derivative = (up - down) / (2.0 * h);
    const double fx = term(x);
    // F near a finite limit loses digits in the difference; allow for that rounding.
    const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * (std::abs(up) + std::abs(down)) / (2.0 * h);
    if (std::abs(derivative - fx) > 1e-6 * std::abs(fx) + rounding) {
      throw ConstructionError(fmt::format("{}: F'({}) = {} does not match f = {}", id, x, derivative, fx));
    }
  }
  return {std::move(id), std::move(term), std::move(antiderivative), std::move(params), start, divergent,
          std::move(description)};
}

SeriesModel harmonic_model() {
  return make_model("harmonic", [](double k) { return 1.0 / k; }, [](double x) { return std::log(x); }, 1, {}, true,
                    "1/k");
}

SeriesModel p_series_model() {
  const double base = std::log1p(std::numbers::sqrt2);
  return make_model(
      "p-series", [](double k) { return 1.0 / std::sqrt(k * (k + 1.0)); },
      [base](double x) { return 2.0 * (std::log(std::sqrt(x) + std::sqrt(x + 1.0)) - base); }, 1, {}, true,
      "1/sqrt(k(k+1))");
}

SeriesModel q_model(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw ConstructionError(fmt::format("q model needs 0 < tau < 1, got {}", tau));
  return make_model(
      fmt::format("q:{}", tau), [tau](double k) { return std::pow(k, -tau); },
      [tau](double x) { return std::expm1((1.0 - tau) * std::log(x)) / (1.0 - tau); }, 1, {tau}, true,
      fmt::format("1/k^{}", tau));
}

SeriesModel extra_model() {
  const double base = std::log(2.0 + std::sqrt(3.0));
  return make_model(
      "extra", [](double k) { return 1.0 / std::sqrt((k - 1.0) * (k + 1.0)); },
      [base](double x) { return std::log(x + std::sqrt((x - 1.0) * (x + 1.0))) - base; }, 2, {}, true,
      "1/sqrt(k^2-1), k >= 2");
}

SeriesModel k_log_k_model() {
  const double base = std::log(std::numbers::ln2);
  return make_model(
      "klogk", [](double k) { return 1.0 / (k * std::log(k)); },
      [base](double x) { return std::log(std::log(x)) - base; }, 2, {}, true, "1/(k ln k), k >= 2");
}

SeriesModel power_model(double a) {
  if (!(a < 0.0)) {
    throw ConstructionError(fmt::format("power model k^{} has non-decreasing terms; only a < 0 is supported", a));
  }
  if (a == -1.0) {
    auto m = harmonic_model();
    m.id = "power:-1";
    m.params = {a};
    return m;
  }
  return make_model(
      fmt::format("power:{}", a), [a](double k) { return std::pow(k, a); },
      [a](double x) { return std::expm1((a + 1.0) * std::log(x)) / (a + 1.0); }, 1, {a}, a >= -1.0,
      fmt::format("k^{}", a));
}

std::vector<SeriesModel> series_registry() {
  return {harmonic_model(), p_series_model(), q_model(0.5), extra_model(), k_log_k_model(), power_model(-2.0)};
}

SeriesModel model_by_name(const std::string& name) {
  if (name == "harmonic") return harmonic_model();
  if (name == "p-series") return p_series_model();
  if (name == "extra") return extra_model();
  if (name == "klogk") return k_log_k_model();
  if (name.rfind("q:", 0) == 0) return q_model(parse_param(name, 2));
  if (name.rfind("power:", 0) == 0) return power_model(parse_param(name, 6));
  throw ParameterError(fmt::format("unknown series model '{}'", name));
}

double partial_sum(const SeriesModel& model, long n) {
  if (n < model.start) throw DomainError(fmt::format("{}: n must be >= {}", model.id, model.start));
  // Blocks of 2^20 terms, each compensated, merged from the small end.
  constexpr long kBlock = 1L << 20;
  numeric::CompensatedSum total;
  for (long hi = n; hi >= model.start; hi -= kBlock) {
    const long lo = std::max(model.start, hi - kBlock + 1);
    numeric::CompensatedSum block;
    for (long k = hi; k >= lo; --k) block += model.term(static_cast<double>(k));
    total += block;
  }
  return total.value();
}

std::vector<double> partial_sums(const SeriesModel& model, long n_max) {
  if (n_max < model.start) throw DomainError(fmt::format("{}: n must be >= {}", model.id, model.start));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max - model.start + 1));
  numeric::CompensatedSum acc;
  for (long k = model.start; k <= n_max; ++k) {
    acc += model.term(static_cast<double>(k));
    out.push_back(acc.value());
  }
  return out;
}

ConstantEnclosure euler_constant(const SeriesModel& model, long n) {
  if (n < std::max(2L, model.start)) throw DomainError("euler_constant needs n >= 2");
  const double s = partial_sum(model, n);
  const auto x = static_cast<double>(n);
  return {s - model.antiderivative(x + 1.0), s - model.antiderivative(x), n};
}

SlResult sl_bounds(const SeriesModel& model, long n, double c_lo, double c_hi) {
  SlResult r;
  r.sum = partial_sum(model, n);
  const double f = model.antiderivative(static_cast<double>(n));
  r.lower = f + c_lo;
  r.upper = f + c_hi;
  r.lower_equality = r.sum == r.lower;
  r.upper_equality = r.sum == r.upper;
  r.holds = r.lower < r.sum && r.sum < r.upper;
  return r;
}

std::vector<SlFixture> sl_fixtures() {
  auto ln = [](long n) { return std::log(static_cast<double>(n)); };
  auto ln1 = [](long n) { return std::log1p(static_cast<double>(n)); };
  const double rt2 = 1.0 / std::numbers::sqrt2;
  std::vector<SlFixture> fx;
  fx.push_back({"eq22", "harmonic", ln1, [ln1](long n) { return ln1(n) + n / (n + 1.0); }, true, true, 1,
                "ln(1+n) < S_n < ln(n+1) + n/(n+1)"});
  fx.push_back({"eq23", "harmonic", ln1, [ln1](long n) { return 1.0 + ln1(n); }, true, true, 1,
                "ln(n+1) < S_n < 1 + ln(n+1)"});
  fx.push_back({"eq24", "harmonic", ln1, [ln](long n) { return 1.0 + ln(n); }, true, false, 1,
                "ln(n+1) < S_n <= 1 + ln n"});
  fx.push_back({"eq25", "harmonic", [ln](long n) { return kEuler + ln(n); }, [ln](long n) { return 1.0 + ln(n); },
                true, false, 1, "C + ln n < S_n <= 1 + ln n"});
  // Grouped so the n = 1 equality cases are exact in floating point.
  fx.push_back({"eq26", "harmonic", [ln1](long n) { return (ln1(n) - std::numbers::ln2) + 1.0; },
                [ln1](long n) { return kEuler + ln1(n); }, false, true, 1,
                "1 - ln 2 + ln(n+1) <= S_n < C + ln(n+1)"});
  fx.push_back({"eq27", "harmonic", [ln](long n) { return kEuler + ln(n); }, [ln1](long n) { return kEuler + ln1(n); },
                true, true, 4, "C + ln n < S_n < C + ln(n+1), n >= 4"});
  fx.push_back({"eq31", "harmonic", [ln1](long n) { return ln1(n) + 0.5 * n / (n + 1.0); }, [](long) { return INFINITY; },
                true, true, 1, "ln(n+1) + n/(2(n+1)) < S_n"});
  // P_n = sum 1/sqrt(k(k+1)); C1 = lim (P_n - ln n) = C - A.
  const double c1 = kEuler - a_series_total();
  fx.push_back({"zd28", "p-series", ln1,
                [ln1, rt2](long n) { return ln1(n) + rt2 - 1.0 / std::sqrt((n + 1.0) * (n + 2.0)); }, true, true, 1,
                "ln(n+1) < P_n < ln(n+1) + 1/sqrt 2 - 1/sqrt((n+1)(n+2))"});
  fx.push_back({"zd35", "p-series", [ln1, rt2](long n) { return (ln1(n) - std::numbers::ln2) + rt2; },
                [ln1, c1](long n) { return c1 + ln1(n); }, false, true, 1,
                "1/sqrt 2 - ln 2 + ln(n+1) <= P_n < C1 + ln(n+1)"});
  fx.push_back({"zd36", "p-series", [ln, c1](long n) { return c1 + ln(n); }, [ln, rt2](long n) { return ln(n) + rt2; },
                true, false, 1, "C1 + ln n < P_n <= 1/sqrt 2 + ln n"});
  // R_n = sum_{k=2}^n 1/sqrt(k^2-1) against G(n) = ln(n + sqrt(n^2-1)); the
  // constant comes from the enclosure at n = 10^6 (outer ends only).
  const auto extra = extra_model();
  const auto enc = euler_constant(extra, 1000000);
  const double base = std::log(2.0 + std::sqrt(3.0));
  auto g = [](long n) {
    const auto x = static_cast<double>(n);
    return std::log(x + std::sqrt((x - 1.0) * (x + 1.0)));
  };
  auto g1 = [](long n) {
    const auto x = static_cast<double>(n);
    return std::log(x + 1.0 + std::sqrt(x * (x + 2.0)));
  };
  const double r2 = 1.0 / std::sqrt(3.0);  // R_2
  fx.push_back({"extra-sl1", "extra", [g, c = enc.lower, base](long n) { return (g(n) - base) + c; },
                [g, r2, base](long n) { return (g(n) - base) + r2; }, true, false, 2,
                "ln(n + sqrt(n^2-1)) + C1 < R_n <= ln(n + sqrt(n^2-1)) + C2"});
  fx.push_back({"extra-sl2", "extra", [g1, r2](long n) { return (g1(n) - g1(2)) + r2; },
                [g1, c = enc.upper, base](long n) { return (g1(n) - base) + c; }, false, true, 2,
                "ln(n+1 + sqrt(n(n+2))) + C3 <= R_n < ln(n+1 + sqrt(n(n+2))) + C4"});
  return fx;
}

const SlFixture& find_fixture(const std::string& id) {
  static const std::vector<SlFixture> fx = sl_fixtures();
  for (const auto& f : fx) {
    if (f.id == id) return f;
  }
  throw ParameterError(fmt::format("unknown fixture '{}'", id));
}

SlResult eval_fixture(const SlFixture& fx, long n, double sum) {
  if (n < fx.n_min) throw DomainError(fmt::format("{} applies for n >= {}", fx.id, fx.n_min));
  SlResult r;
  r.sum = sum;
  r.lower = fx.lower(n);
  r.upper = fx.upper(n);
  r.lower_equality = r.sum == r.lower;
  r.upper_equality = r.sum == r.upper;
  const bool lo_ok = fx.lower_strict ? r.lower < r.sum : r.lower <= r.sum;
  const bool hi_ok = fx.upper_strict ? r.sum < r.upper : r.sum <= r.upper;
  r.holds = lo_ok && hi_ok;
  return r;
}

namespace {

double a_term(double k) {
  const double r = std::sqrt(k + 1.0);
  return 1.0 / (k * r * (r + std::sqrt(k)));
}

// sum_{k>n} k^-p by Euler-Maclaurin (three terms).
double power_tail(double n, double p) {
  return std::pow(n, 1.0 - p) / (p - 1.0) - 0.5 * std::pow(n, -p) + p / 12.0 * std::pow(n, -p - 1.0);
}

}  // namespace

double a_series_partial(long n) {
  if (n < 1) throw DomainError("a_series_partial: n must be >= 1");
  numeric::CompensatedSum s;
  for (long k = n; k >= 1; --k) s += a_term(static_cast<double>(k));
  return s.value();
}

double a_series_total() {
  static const double total = [] {
    constexpr long n = 1000000;
    const auto x = static_cast<double>(n);
    // a_k = (1/k)(1 - (1 + 1/k)^(-1/2)) = k^-2/2 - 3k^-3/8 + 5k^-4/16 - 35k^-5/128 + ...
    const double tail = 0.5 * power_tail(x, 2.0) - 0.375 * power_tail(x, 3.0) + 0.3125 * power_tail(x, 4.0) -
                        35.0 / 128.0 * power_tail(x, 5.0);
    return a_series_partial(n) + tail;
  }();
  return total;
}

PnDecomposition pn_constant_decomposition(long n) {
  if (n < 10) throw DomainError("pn_constant_decomposition needs n >= 10");
  const auto enc = euler_constant(p_series_model(), n);
  // lim (F(x) - ln x) for F(x) = 2 ln((sqrt x + sqrt(x+1)) / (1 + sqrt 2)).
  const double offset = 2.0 * std::numbers::ln2 - 2.0 * std::log1p(std::numbers::sqrt2);
  const auto h = euler_constant(harmonic_model(), n);
  PnDecomposition d;
  d.c1_estimate = enc.midpoint() + offset;
  d.a_sum = a_series_total();
  d.c_minus_a = h.midpoint() - d.a_sum;
  d.enclosure_width = enc.width() + h.width();
  return d;
}

double expansion_coefficient_A(int k) {
  if (k < 1) throw DomainError("expansion_coefficient_A needs k >= 1");
  // Degree-k integrand; n points integrate degree 2n-1 exactly.
  const auto rule = numeric::gauss_legendre(k / 2 + 2);
  auto integrand = [k](double x) {
    double p = x;
    for (int j = 1; j < k; ++j) p *= static_cast<double>(j) - x;
    return p;
  };
  return numeric::integrate_gauss(integrand, 0.0, 1.0, rule) / k;
}

std::vector<double> asymptotic_sequence(int order, const std::vector<long>& n_grid, double c) {
  if (order != 1 && order != 2) throw ParameterError("asymptotic order must be 1 or 2");
  const auto h = harmonic_model();
  std::vector<double> out;
  for (long n : n_grid) {
    const auto x = static_cast<double>(n);
    const double r = partial_sum(h, n) - c - std::log(x);
    out.push_back(order == 1 ? x * r : x * x * (r - 0.5 / x));
  }
  return out;
}

double asymptotic_limit(int order, const std::vector<long>& n_grid, std::optional<double> c) {
  if (n_grid.size() < 3) throw ParameterError("asymptotic_limit needs at least 3 grid points");
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1]) throw ParameterError("asymptotic_limit: grid must be increasing");
  }
  const double constant = c ? *c : euler_constant(harmonic_model(), 1000000).midpoint();
  const auto q = asymptotic_sequence(order, n_grid, constant);
  const std::size_t m = q.size();
  std::vector<double> h(m);
  for (std::size_t i = 0; i < m; ++i) h[i] = 1.0 / static_cast<double>(n_grid[i]);
  // Neville tableau evaluated at h = 0; diag[k] uses points 0..k.
  std::vector<double> t = q;
  std::vector<double> diag{q[0]};
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      t[i] = (h[i - level] * t[i] - h[i] * t[i - 1]) / (h[i - level] - h[i]);
    }
    diag.push_back(t[level]);
  }
  // A growing correction is tolerated while it stays small next to the
  // estimate; order 2 magnifies the error of the constant by n^2.
  double prev = std::abs(diag[1] - diag[0]);
  for (std::size_t k = 2; k < diag.size(); ++k) {
    const double corr = std::abs(diag[k] - diag[k - 1]);
    if (corr > prev && corr > 1e-2 * (1.0 + std::abs(diag[k]))) {
      throw ExtrapolationUnstable(
          fmt::format("extrapolation corrections grow ({} after {}); check the constant", corr, prev));
    }
    prev = corr;
  }
  return diag.back();
}

double zeta_continuation(double a, long n) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError(fmt::format("zeta_continuation needs 0 < a < 1, got {}", a));
  if (n < 10) throw DomainError("zeta_continuation needs n >= 10");
  numeric::CompensatedSum s;
  for (long k = n; k >= 1; --k) s += std::pow(static_cast<double>(k), -a);
  const auto x = static_cast<double>(n);
  return s.value() - std::pow(x, 1.0 - a) / (1.0 - a) - 0.5 * std::pow(x, -a);
}

}  // namespace ineqlab::sums
