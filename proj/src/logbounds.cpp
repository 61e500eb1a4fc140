#include "ineqlab/logbounds.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <mpfr.h>
#include <numbers>
#include <numeric>

#include "ineqlab/solve.hpp"
#include "ineqlab/support/compensated_sum.hpp"

namespace ineqlab::logbounds {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kE = std::numbers::e;

// ln(1 + 1/x)
double lnr(double x) { return std::log1p(1.0 / x); }

// (1 + 1/x)^(x + c)
double epow(double x, double c) { return std::exp((x + c) * lnr(x)); }

Domain closed_half_line(double lo = 0.0) { return {lo, kInf, true, false}; }
Domain open_half_line(double lo = 0.0) { return {lo, kInf, false, false}; }

BoundFamily family(std::string id, std::function<double(double)> lhs, std::function<double(double)> rhs, Domain d,
                   bool strict, std::string formula) {
  return {std::move(id), std::move(lhs), std::move(rhs), d, strict, std::move(formula)};
}

std::vector<BoundFamily> build_registry() {
  std::vector<BoundFamily> r;
  auto ln1p = [](double x) { return std::log1p(x); };
  auto e_const = [](double) { return kE; };

  r.push_back(family("eq05", ln1p, [](double x) { return x; }, closed_half_line(), false, "ln(1+x) <= x"));
  r.push_back(family("eq06", [](double x) { return x / (x + 1.0); }, ln1p, closed_half_line(), false,
                     "x/(x+1) <= ln(1+x)"));
  r.push_back(family("eq07", [](double x) { return lnr(x) * lnr(x); }, [](double x) { return 1.0 / (x * (x + 1.0)); },
                     open_half_line(), true, "ln^2(1+1/x) < 1/(x(x+1))"));
  r.push_back(family("eq081", ln1p, [](double y) { return y / std::sqrt(1.0 + y); }, closed_half_line(), false,
                     "ln(1+y) <= y/sqrt(1+y)"));
  r.push_back(family("eq09", ln1p, [](double y) { return y / std::sqrt(y + 1.0); }, closed_half_line(), false,
                     "ln(1+y) <= y/sqrt(y+delta), delta = 1"));
  r.push_back(family("eq10", [](double x) { return 2.0 * x / (x + 2.0); }, ln1p, open_half_line(), true,
                     "2x/(x+2) < ln(1+x)"));
  r.push_back(family("eq12-lower", [](double x) { return x - x * x / 2.0; }, ln1p, open_half_line(), true,
                     "x - x^2/2 < ln(1+x)"));
  r.push_back(family("eq12-upper", ln1p, [](double x) { return x - x * x / 2.0 + x * x * x / 3.0; },
                     open_half_line(), true, "ln(1+x) < x - x^2/2 + x^3/3"));
  r.push_back(family("eq13", ln1p, [](double x) { return x * (x + 2.0) / (2.0 * (x + 1.0)); }, closed_half_line(),
                     false, "ln(1+x) <= x(x+2)/(2(x+1))"));
  r.push_back(family("eq14a", [](double x) { return x / std::sqrt(1.0 + x); },
                     [](double x) { return x * (x + 2.0) / (2.0 * (x + 1.0)); }, closed_half_line(), false,
                     "x/sqrt(1+x) <= x(x+2)/(2(x+1))"));
  r.push_back(family("eq14b", [](double x) { return x * (x + 2.0) / (2.0 * (x + 1.0)); }, [](double x) { return x; },
                     closed_half_line(), false, "x(x+2)/(2(x+1)) <= x"));
  r.push_back(family("eq15", [](double x) { return x / (x + 1.0); }, [](double x) { return 2.0 * x / (x + 2.0); },
                     closed_half_line(), false, "x/(x+1) <= 2x/(x+2)"));
  r.push_back(family("eq17a", lnr, [](double y) { return 1.0 / std::sqrt(y * (y + 1.0)); }, open_half_line(), true,
                     "ln(1+1/y) < 1/sqrt(y(y+1))"));
  r.push_back(family("eq17b", [](double y) { return 1.0 / std::sqrt(y * (y + 1.0)); },
                     [](double y) { return (2.0 * y + 1.0) / (2.0 * y * (y + 1.0)); }, open_half_line(), true,
                     "1/sqrt(y(y+1)) < (2y+1)/(2y(y+1))"));
  r.push_back(family("eq17c", [](double y) { return (2.0 * y + 1.0) / (2.0 * y * (y + 1.0)); },
                     [](double y) { return 1.0 / y; }, open_half_line(), true, "(2y+1)/(2y(y+1)) < 1/y"));
  r.push_back(family("eq19-lower", [](double y) { return 1.0 / y - 1.0 / (2.0 * y * y); }, lnr, open_half_line(), true,
                     "1/y - 1/(2y^2) < ln(1+1/y)"));
  r.push_back(family("eq19-upper", lnr, [](double y) { return 1.0 / y - 1.0 / (2.0 * y * y) + 1.0 / (3.0 * y * y * y); },
                     open_half_line(), true, "ln(1+1/y) < 1/y - 1/(2y^2) + 1/(3y^3)"));
  r.push_back(family("eq20-lower", [](double y) { return 1.0 / (y + 1.0); }, lnr, open_half_line(), true,
                     "1/(y+1) < ln(1+1/y)"));
  r.push_back(family("eq20-upper", lnr, [](double y) { return 1.0 / y; }, open_half_line(), true,
                     "ln(1+1/y) < 1/y"));
  r.push_back(family("eq28", [](double x) { return 1.0 / std::sqrt((x + 1.0) * (x + 2.0)); }, lnr, open_half_line(),
                     true, "1/sqrt((x+1)(x+2)) < ln(1+1/x)"));
  r.push_back(family("eq30", lnr, [](double x) { return 0.5 * (1.0 / x + 1.0 / (x + 1.0)); }, open_half_line(), true,
                     "ln(1+1/x) < (1/x + 1/(x+1))/2"));
  r.push_back(family("eq32", [](double x) { return 0.5 * (1.0 / (x + 1.0) + 1.0 / (x + 2.0)); }, lnr,
                     open_half_line(), true, "(1/(x+1) + 1/(x+2))/2 < ln(1+1/x)"));
  r.push_back(family("eq35-lower", [](double x) { return epow(x, 0.0); }, e_const, open_half_line(), true,
                     "(1+1/x)^x < e"));
  r.push_back(family("eq35-upper", e_const, [](double x) { return epow(x, 1.0); }, open_half_line(), true,
                     "e < (1+1/x)^(x+1)"));
  r.push_back(family("eq37", e_const, [](double x) { return epow(x, 0.5); }, open_half_line(), true,
                     "e < (1+1/x)^(x+1/2)"));
  r.push_back(family("eq38", [](double x) { return 1.0 / (x + 0.5); }, lnr, open_half_line(), true,
                     "1/(x+1/2) < ln(1+1/x)"));
  r.push_back(family("zd10", [](double x) { return std::log(x); }, [](double x) { return (x * x - 1.0) / 2.0; },
                     open_half_line(), false, "ln x <= (x^2-1)/2"));
  const double c57[] = {1.0 / 5.0, 2.0 / 5.0, 21.0 / 47.0};
  const char* c57_text[] = {"1/5", "2/5", "21/47"};
  for (int k = 1; k <= 3; ++k) {
    const double c = c57[k - 1];
    r.push_back(family(fmt::format("zd57-c{}", k), [c](double x) { return epow(x, c); }, e_const,
                       closed_half_line(k), true, fmt::format("(1+1/x)^(x+{}) < e, x >= {}", c57_text[k - 1], k)));
  }
  r.push_back(family(
      "zd58a", [](double x) { return epow(x, 0.5 - (x + 2.0) / (2.0 * (6.0 * x * x - 9.0 * x + 2.0))); }, e_const,
      closed_half_line(1.0), true, "(1+1/x)^(x + 1/2 - (x+2)/(2(6x^2-9x+2))) < e, x >= 1"));
  r.push_back(family(
      "zd58b",
      [](double x) {
        return epow(x, 0.5 - (2.0 * x * x - 2.0 * x - 9.0) / (2.0 * (12.0 * x * x * x - 6.0 * x * x + 4.0 * x - 9.0)));
      },
      e_const, closed_half_line(1.0), true, "(1+1/x)^(x + 1/2 - (2x^2-2x-9)/(2(12x^3-6x^2+4x-9))) < e, x >= 1"));
  r.push_back(family("zd61-lower", [](double x) { return std::exp(1.0 / (2.0 * x) - 1.0 / (3.0 * x * x)); },
                     [](double x) { return std::exp(1.0 - x * lnr(x)); }, closed_half_line(1.0), true,
                     "exp(1/(2x) - 1/(3x^2)) < e/(1+1/x)^x, x >= 1"));
  r.push_back(family("zd61-upper", [](double x) { return std::exp(1.0 - x * lnr(x)); },
                     [](double x) { return std::exp(1.0 / (2.0 * x)); }, closed_half_line(1.0), true,
                     "e/(1+1/x)^x < exp(1/(2x)), x >= 1"));
  r.push_back(family("zd63b", [](double x) { return x * (x + 1.0) * lnr(x) * lnr(x); }, [](double) { return 1.0; },
                     open_half_line(), true, "ln((1+1/x)^x) ln((1+1/x)^(x+1)) < 1"));
  r.push_back(family("zd63c", [](double x) { return lnr(x) * lnr(x / 2.0); },
                     [](double x) { return (lnr(x / 2.0) - lnr(x)) / (x - x / 2.0); }, open_half_line(), true,
                     "ln(1+1/x) ln(1+1/y) < (ln(1+1/y) - ln(1+1/x))/(x-y), y = x/2"));
  r.push_back(family("zd64-n3", [](double x) { return std::pow(lnr(x), 3); },
                     [](double x) { return 1.0 / (x * (x + 1.0) * (x + 0.5)); }, open_half_line(), true,
                     "ln^3(1+1/x) < 1/(x(x+1)(x+1/2))"));
  r.push_back(family("zd64-n4", [](double x) { return std::pow(lnr(x), 4); },
                     [](double x) { return 1.0 / (x * (x + 1.0) * (x + 0.5) * (x + 0.35)); }, open_half_line(), true,
                     "ln^4(1+1/x) < 1/(x(x+1)(x+1/2)(x+0.35))"));
  for (int n = 2; n <= 8; ++n) {
    r.push_back(family(fmt::format("zd64-general-n{}", n), [n](double x) { return std::pow(lnr(x), n); },
                       [n](double x) { return 1.0 / ((x + n / 2.0) * std::pow(x, n - 1)); }, open_half_line(), true,
                       fmt::format("ln^{0}(1+1/x) < 1/((x+{0}/2) x^{1})", n, n - 1)));
  }
  return r;
}

struct Chain {
  ChainInfo info;
  std::vector<std::pair<std::string, std::function<double(double)>>> terms;
};

std::vector<Chain> build_chains() {
  auto ln1p = [](double x) { return std::log1p(x); };
  auto e_const = [](double) { return kE; };
  std::vector<Chain> c;
  c.push_back({{"eq12", open_half_line(), true, "x - x^2/2 < ln(1+x) < x - x^2/2 + x^3/3"},
               {{"x - x^2/2", [](double x) { return x - x * x / 2.0; }},
                {"ln(1+x)", ln1p},
                {"x - x^2/2 + x^3/3", [](double x) { return x - x * x / 2.0 + x * x * x / 3.0; }}}});
  c.push_back({{"eq14", closed_half_line(), true, "ln(1+x) <= x/sqrt(1+x) <= x(x+2)/(2(x+1)) <= x"},
               {{"ln(1+x)", ln1p},
                {"x/sqrt(1+x)", [](double x) { return x / std::sqrt(1.0 + x); }},
                {"x(x+2)/(2(x+1))", [](double x) { return x * (x + 2.0) / (2.0 * (x + 1.0)); }},
                {"x", [](double x) { return x; }}}});
  c.push_back({{"eq15", closed_half_line(), true, "x/(x+1) <= 2x/(x+2) <= ln(1+x)"},
               {{"x/(x+1)", [](double x) { return x / (x + 1.0); }},
                {"2x/(x+2)", [](double x) { return 2.0 * x / (x + 2.0); }},
                {"ln(1+x)", ln1p}}});
  c.push_back({{"eq17", open_half_line(), true, "ln(1+1/y) < 1/sqrt(y(y+1)) < (2y+1)/(2y(y+1)) < 1/y"},
               {{"ln(1+1/y)", lnr},
                {"1/sqrt(y(y+1))", [](double y) { return 1.0 / std::sqrt(y * (y + 1.0)); }},
                {"(2y+1)/(2y(y+1))", [](double y) { return (2.0 * y + 1.0) / (2.0 * y * (y + 1.0)); }},
                {"1/y", [](double y) { return 1.0 / y; }}}});
  c.push_back({{"eq19", open_half_line(), true, "1/y - 1/(2y^2) < ln(1+1/y) < 1/y - 1/(2y^2) + 1/(3y^3)"},
               {{"1/y - 1/(2y^2)", [](double y) { return 1.0 / y - 1.0 / (2.0 * y * y); }},
                {"ln(1+1/y)", lnr},
                {"1/y - 1/(2y^2) + 1/(3y^3)",
                 [](double y) { return 1.0 / y - 1.0 / (2.0 * y * y) + 1.0 / (3.0 * y * y * y); }}}});
  c.push_back({{"eq20", open_half_line(), true, "1/(y+1) < ln(1+1/y) < 1/y"},
               {{"1/(y+1)", [](double y) { return 1.0 / (y + 1.0); }},
                {"ln(1+1/y)", lnr},
                {"1/y", [](double y) { return 1.0 / y; }}}});
  c.push_back({{"eq29", open_half_line(), true, "1/sqrt((x+1)(x+2)) < ln(1+1/x) < 1/sqrt(x(x+1))"},
               {{"1/sqrt((x+1)(x+2))", [](double x) { return 1.0 / std::sqrt((x + 1.0) * (x + 2.0)); }},
                {"ln(1+1/x)", lnr},
                {"1/sqrt(x(x+1))", [](double x) { return 1.0 / std::sqrt(x * (x + 1.0)); }}}});
  c.push_back({{"eq35", open_half_line(), true, "(1+1/x)^x < e < (1+1/x)^(x+1/2) < (1+1/x)^(x+1)"},
               {{"(1+1/x)^x", [](double x) { return epow(x, 0.0); }},
                {"e", e_const},
                {"(1+1/x)^(x+1/2)", [](double x) { return epow(x, 0.5); }},
                {"(1+1/x)^(x+1)", [](double x) { return epow(x, 1.0); }}}});
  return c;
}

const std::vector<Chain>& chains() {
  static const std::vector<Chain> c = build_chains();
  return c;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || std::isinf(x)) throw DomainError(fmt::format("{}: x must be positive and finite, got {}", what, x));
}

double eps_e_exponent(double x) {
  if (x >= 1e3) {
    const double t = 1.0 / x;
    return 0.5 + t * (-1.0 / 12.0 + t * (1.0 / 24.0 + t * (-19.0 / 720.0 + t * (3.0 / 160.0 - t * 863.0 / 60480.0))));
  }
  return 1.0 / lnr(x) - x;
}

}  // namespace

const std::vector<BoundFamily>& bound_registry() {
  static const std::vector<BoundFamily> r = build_registry();
  return r;
}

const BoundFamily& find_family(const std::string& id) {
  for (const auto& f : bound_registry()) {
    if (f.id == id) return f;
  }
  throw ParameterError(fmt::format("unknown bound family '{}'", id));
}

const std::vector<ChainInfo>& chain_registry() {
  static const std::vector<ChainInfo> infos = [] {
    std::vector<ChainInfo> v;
    for (const auto& c : chains()) v.push_back(c.info);
    return v;
  }();
  return infos;
}

std::vector<std::pair<std::string, double>> eval_chain(const std::string& chain_id, double x) {
  for (const auto& c : chains()) {
    if (c.info.id != chain_id) continue;
    if (!c.info.domain.contains(x)) {
      throw DomainError(fmt::format("chain {} is not defined at x = {}", chain_id, x));
    }
    std::vector<std::pair<std::string, double>> out;
    for (const auto& [label, fn] : c.terms) out.emplace_back(label, fn(x));
    return out;
  }
  throw ParameterError(fmt::format("unknown chain '{}'", chain_id));
}

const std::vector<std::string>& eps_families() {
  static const std::vector<std::string> names = {"log_sqrt", "pade2", "e_exponent", "sqrt_pair", "mid_pair"};
  return names;
}

double eps_eval(const std::string& family, double x) {
  require_positive(x, "eps_eval");
  if (family == "log_sqrt") {
    const double r = x / std::log1p(x);
    return r * r - x;
  }
  if (family == "pade2") return 2.0 * x / std::log1p(x) - x;
  if (family == "e_exponent") return eps_e_exponent(x);
  if (family == "sqrt_pair") {
    // ln^2(1+1/x) = 1/((x+1)(x+e)); the bracket [0, 2] comes from the
    // bounds 1/((x+1)(x+2)) < ln^2(1+1/x) < 1/(x(x+1)).
    const double target = 1.0 / ((x + 1.0) * lnr(x) * lnr(x));
    return solve::bisect([&](double e) { return x + e - target; }, 0.0, 2.0, 1e-12).root();
  }
  if (family == "mid_pair") {
    // ln(1+1/x) = (x+1/2) / ((x+1/2)^2 - e^2), with 0 <= e < 1/2 from
    // 1/(x+1/2) < ln(1+1/x) < (2x+1)/(2x(x+1)).
    const double h = x + 0.5;
    const double l = lnr(x);
    return solve::bisect([&](double e) { return h / ((h - e) * (h + e)) - l; }, 0.0, 0.5, 1e-12).root();
  }
  throw ParameterError(fmt::format("unknown eps family '{}'", family));
}

double eps_taylor_bound(int n, double x) {
  if (n < 1) throw ParameterError("eps_taylor_bound: n must be >= 1");
  if (!(x >= 1.0) || std::isinf(x)) throw DomainError(fmt::format("eps_taylor_bound: x must be >= 1, got {}", x));
  // With t = 1/x: sum = t * T, T = sum_j (-1)^(j-1) t^(j-1) / j, and
  // eps_n = x (1 - T) / T where 1 - T = sum_{j>=2} (-1)^j t^(j-1) / j.
  const double t = 1.0 / x;
  numeric::CompensatedSum big_t;
  numeric::CompensatedSum u;  // (1 - T) / t
  double power = 1.0;         // t^(j-1)
  for (int j = 1; j <= n; ++j) {
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    big_t += sign * power / j;
    if (j >= 2) u += -sign * (power / t) / j;
    power *= t;
  }
  return u.value() / big_t.value();
}

namespace {

__extension__ typedef __int128 i128;

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowGuard("continued-fraction coefficient overflow");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowGuard("continued-fraction coefficient overflow");
  return r;
}

// b * p + m2 * x * q for coefficient vectors (constant term first).
std::vector<i128> step_exact(const std::vector<i128>& p, const std::vector<i128>& q, i128 b, i128 m2) {
  std::vector<i128> out(std::max(p.size(), q.size() + 1), 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = checked_add(out[i], checked_mul(b, p[i]));
  for (std::size_t i = 0; i < q.size(); ++i) out[i + 1] = checked_add(out[i + 1], checked_mul(m2, q[i]));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<long double> step_float(const std::vector<long double>& p, const std::vector<long double>& q,
                                    long double b, long double m2) {
  std::vector<long double> out(std::max(p.size(), q.size() + 1), 0.0L);
  for (std::size_t i = 0; i < p.size(); ++i) out[i] += b * p[i];
  for (std::size_t i = 0; i < q.size(); ++i) out[i + 1] += m2 * q[i];
  while (out.size() > 1 && out.back() == 0.0L) out.pop_back();
  return out;
}

// a_k = m^2 x with m = 1 for k = 1 and m = floor(k/2) otherwise.
long long numerator_scale(int k) {
  const long long m = k == 1 ? 1 : k / 2;
  return m * m;
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Convergent cf_convergent(int n) {
  if (n < 1) throw ParameterError("cf_convergent: n must be >= 1");
  Convergent c;
  c.n = n;
  if (n <= kExactConvergentLimit) {
    std::vector<i128> p_prev{1}, p{0}, q_prev{0}, q{1};
    for (int k = 1; k <= n; ++k) {
      auto p_next = step_exact(p, p_prev, k, numerator_scale(k));
      auto q_next = step_exact(q, q_prev, k, numerator_scale(k));
      p_prev = std::move(p);
      p = std::move(p_next);
      q_prev = std::move(q);
      q = std::move(q_next);
    }
    i128 g = 0;
    for (i128 v : p) g = gcd128(g, v);
    for (i128 v : q) g = gcd128(g, v);
    if (g == 0) g = 1;
    constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
    for (i128 v : p) {
      if (abs128(v / g) > kMax) throw OverflowGuard("reduced coefficient exceeds 64 bits");
      c.p_coeffs.push_back(static_cast<std::int64_t>(v / g));
      c.p_float.push_back(static_cast<long double>(v / g));
    }
    for (i128 v : q) {
      if (abs128(v / g) > kMax) throw OverflowGuard("reduced coefficient exceeds 64 bits");
      c.q_coeffs.push_back(static_cast<std::int64_t>(v / g));
      c.q_float.push_back(static_cast<long double>(v / g));
    }
    return c;
  }
  c.exact = false;
  std::vector<long double> p_prev{1}, p{0}, q_prev{0}, q{1};
  for (int k = 1; k <= n; ++k) {
    auto p_next = step_float(p, p_prev, k, numerator_scale(k));
    auto q_next = step_float(q, q_prev, k, numerator_scale(k));
    // Rescale so the leading denominator coefficient stays near 1.
    const long double s = q_next.back();
    for (auto& v : p_next) v /= s;
    for (auto& v : q_next) v /= s;
    for (auto& v : p) v /= s;
    for (auto& v : q) v /= s;
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  c.p_float = std::move(p);
  c.q_float = std::move(q);
  return c;
}

double cf_eval(int n, double x) {
  if (n < 1) throw ParameterError("cf_eval: n must be >= 1");
  if (!(x > -1.0)) throw DomainError(fmt::format("cf_eval: x must exceed -1, got {}", x));
  long double p_prev = 1, p = 0, q_prev = 0, q = 1;
  for (int k = 1; k <= n; ++k) {
    const long double a = static_cast<long double>(numerator_scale(k)) * x;
    const long double p_next = k * p + a * p_prev;
    const long double q_next = k * q + a * q_prev;
    p_prev = p;
    p = p_next;
    q_prev = q;
    q = q_next;
    const long double s = std::fabs(q) > 1e300L ? 1.0L / std::fabs(q) : 1.0L;
    p *= s;
    q *= s;
    p_prev *= s;
    q_prev *= s;
  }
  return static_cast<double>(p / q);
}

namespace {

// R_n(x) into `out` by the three-term recurrence at the precision of `out`.
void cf_eval_mp(int n, double x, mpfr_t out) {
  const mpfr_prec_t prec = mpfr_get_prec(out);
  mpfr_t p_prev, p, q_prev, q, a, t;
  mpfr_inits2(prec, p_prev, p, q_prev, q, a, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(p_prev, 1, MPFR_RNDN);
  mpfr_set_ui(p, 0, MPFR_RNDN);
  mpfr_set_ui(q_prev, 0, MPFR_RNDN);
  mpfr_set_ui(q, 1, MPFR_RNDN);
  for (int k = 1; k <= n; ++k) {
    mpfr_set_d(a, x, MPFR_RNDN);
    mpfr_mul_si(a, a, numerator_scale(k), MPFR_RNDN);
    // p_next = k p + a p_prev; the old p becomes p_prev.
    mpfr_mul(t, a, p_prev, MPFR_RNDN);
    mpfr_set(p_prev, p, MPFR_RNDN);
    mpfr_mul_si(p, p, k, MPFR_RNDN);
    mpfr_add(p, p, t, MPFR_RNDN);
    mpfr_mul(t, a, q_prev, MPFR_RNDN);
    mpfr_set(q_prev, q, MPFR_RNDN);
    mpfr_mul_si(q, q, k, MPFR_RNDN);
    mpfr_add(q, q, t, MPFR_RNDN);
  }
  mpfr_div(out, p, q, MPFR_RNDN);
  mpfr_clears(p_prev, p, q_prev, q, a, t, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

int cf_compare(int n, int m, double x) {
  if (n < 1 || m < 0) throw ParameterError("cf_compare: need n >= 1 and m >= 0");
  if (!(x > -1.0) || !std::isfinite(x)) throw DomainError(fmt::format("cf_compare: x must exceed -1, got {}", x));
  if (x == 0.0 || n == m) return 0;
  const double scale = std::max(0.0, -std::log2(std::abs(x)));
  const auto prec = static_cast<mpfr_prec_t>(128 + 8 * std::max(n, m) + (std::max(n, m) + 2) * scale);
  mpfr_t lhs, rhs;
  mpfr_inits2(prec, lhs, rhs, static_cast<mpfr_ptr>(nullptr));
  cf_eval_mp(n, x, lhs);
  if (m == 0) {
    mpfr_set_d(rhs, x, MPFR_RNDN);
    mpfr_log1p(rhs, rhs, MPFR_RNDN);
  } else {
    cf_eval_mp(m, x, rhs);
  }
  const int c = mpfr_cmp(lhs, rhs);
  mpfr_clears(lhs, rhs, static_cast<mpfr_ptr>(nullptr));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

double sqrt_factorial_series_mp(double x, double tol) {
  // Terms peak near e^(x^2/2) before decaying, so the working precision must
  // cover x^2/2 / ln(10) ~ 0.22 x^2 decimal digits of cancellation.
  const double digits = 0.22 * x * x + 30.0;
  const auto prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  mpfr_t sum, term, root;
  mpfr_inits2(prec, sum, term, root, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(sum, 1.0, MPFR_RNDN);
  mpfr_set_d(term, 1.0, MPFR_RNDN);
  const double x2 = x * x;
  for (long k = 1; k < 1000000; ++k) {
    mpfr_mul_d(term, term, x, MPFR_RNDN);
    mpfr_set_si(root, k, MPFR_RNDN);
    mpfr_sqrt(root, root, MPFR_RNDN);
    mpfr_div(term, term, root, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    if (static_cast<double>(k) > x2) {
      // |term| < tol * |sum| compared in log space to avoid underflow.
      if (mpfr_zero_p(term) || mpfr_zero_p(sum)) break;
      long e_term = 0, e_sum = 0;
      const double m_term = std::abs(mpfr_get_d_2exp(&e_term, term, MPFR_RNDN));
      const double m_sum = std::abs(mpfr_get_d_2exp(&e_sum, sum, MPFR_RNDN));
      const double log_ratio = std::log2(m_term) + e_term - std::log2(m_sum) - e_sum;
      if (log_ratio < std::log2(tol)) break;
    }
  }
  const double out = mpfr_get_d(sum, MPFR_RNDN);
  mpfr_clears(sum, term, root, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

double sqrt_factorial_series(double x, double tol) {
  if (!(tol > 0.0)) throw ParameterError("sqrt_factorial_series: tol must be positive");
  if (!std::isfinite(x)) throw DomainError("sqrt_factorial_series: x must be finite");
  if (x < 0.0) return sqrt_factorial_series_mp(x, tol);
  numeric::CompensatedSum sum(1.0);
  double term = 1.0;
  const double x2 = x * x;
  for (long k = 1; k < 1000000; ++k) {
    term *= x / std::sqrt(static_cast<double>(k));
    sum += term;
    if (static_cast<double>(k) > x2 && std::abs(term) < tol * std::abs(sum.value())) break;
    if (!std::isfinite(term)) break;
  }
  return sum.value();
}

}  // namespace ineqlab::logbounds
