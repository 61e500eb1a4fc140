#include "ineqlab/means.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

#include "ineqlab/solve.hpp"
#include "ineqlab/support/counter_rng.hpp"
#include "ineqlab/support/parallel.hpp"
#include "ineqlab/support/quadrature.hpp"

namespace ineqlab::means {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kParamEps = 1e-7;
constexpr double kDiagonal = 1e-8;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// log((1 + e^z) / 2), accurate near z = 0 and for large |z|.
double log_half_one_plus_exp(double z) {
  if (z > 30.0) return z - std::numbers::ln2 + std::log1p(std::exp(-z));
  return std::log1p(0.5 * std::expm1(z));
}

double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

// log|e^w - 1|
double log_expm1_abs(double w) {
  if (w > 30.0) return w + std::log1p(-std::exp(-w));
  return std::log(std::abs(std::expm1(w)));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_inputs(double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError(fmt::format("mean arguments must be finite and nonnegative, got ({}, {})", x, y));
  }
}

bool near_diagonal(double lo, double hi) { return hi - lo < kDiagonal * hi; }

double clamp_to(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

void check_weights(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0) || std::abs(a + b - 1.0) > 1e-12) {
    throw ParameterError(fmt::format("weights ({}, {}) must be nonnegative and sum to 1", a, b));
  }
}

MeanValueReport power_mean(double alpha, double x, double y) {
  if (std::isnan(alpha)) throw ParameterError("power mean: alpha is NaN");
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (alpha == kInf) return {hi, Branch::Generic};
  if (alpha == -kInf) return {lo, Branch::Generic};
  if (lo == hi) return {lo, Branch::Generic};
  if (lo == 0.0) {
    if (alpha < -kParamEps) throw DomainError("power mean with negative exponent needs positive arguments");
    if (alpha <= kParamEps) return {0.0, Branch::LimitCase};
    return {hi * std::exp(-std::numbers::ln2 / alpha), Branch::Generic};
  }
  if (near_diagonal(lo, hi)) {
    const double m = 0.5 * (lo + hi);
    const double h = (hi - lo) / (hi + lo);
    return {m * (1.0 + 0.5 * (alpha - 1.0) * h * h), Branch::LimitCase};
  }
  const double u = std::log(hi / lo);
  if (std::abs(alpha) < kParamEps) {
    const double prod = lo * hi;
    const double g = std::isnormal(prod) ? std::sqrt(prod) : std::sqrt(lo) * std::sqrt(hi);
    // ln M_alpha = ln G + alpha u^2 / 8 + O(alpha^3 u^4)
    return {alpha == 0.0 ? g : clamp_to(g * std::exp(alpha * u * u / 8.0), lo, hi), Branch::LimitCase};
  }
  const double v = lo * std::exp(log_half_one_plus_exp(alpha * u) / alpha);
  return {clamp_to(v, lo, hi), Branch::Generic};
}

double rado_generic_core(double beta, double lo, double hi) {
  const double u = std::log(hi / lo);
  const double ln_ratio = log_expm1_abs((beta + 1.0) * u) - std::log(std::abs(beta + 1.0)) - log_expm1_abs(u);
  return clamp_to(lo * std::exp(ln_ratio / beta), lo, hi);
}

MeanValueReport rado_mean(double beta, double x, double y) {
  if (std::isnan(beta)) throw ParameterError("Rado mean: beta is NaN");
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (beta == kInf) return {hi, Branch::Generic};
  if (beta == -kInf) return {lo, Branch::Generic};
  if (lo == hi) return {lo, Branch::Generic};
  if (lo == 0.0) {
    if (beta <= -1.0 + kParamEps) throw DomainError("Rado mean with beta <= -1 needs positive arguments");
    if (std::abs(beta) < kParamEps) return {hi / std::numbers::e, Branch::LimitCase};
    return {hi * std::exp(-std::log1p(beta) / beta), Branch::Generic};
  }
  if (beta == -2.0) return {std::sqrt(lo) * std::sqrt(hi), Branch::Generic};
  if (beta == 1.0) return {0.5 * (lo + hi), Branch::Generic};
  if (near_diagonal(lo, hi)) {
    const double m = 0.5 * (lo + hi);
    const double h = (hi - lo) / (hi + lo);
    return {m * (1.0 + (beta - 1.0) * h * h / 6.0), Branch::LimitCase};
  }
  const double u = std::log(hi / lo);
  if (std::abs(beta + 1.0) < kParamEps) {
    return {clamp_to(lo * std::expm1(u) / u, lo, hi), Branch::LimitCase};
  }
  if (std::abs(beta) < kParamEps) {
    const double ln_ratio = u / std::expm1(u) + u - 1.0;
    return {clamp_to(lo * std::exp(ln_ratio), lo, hi), Branch::LimitCase};
  }
  return {rado_generic_core(beta, lo, hi), Branch::Generic};
}

MeanValueReport gini_mean(double u, double v, double x, double y) {
  if (std::isnan(u) || std::isnan(v) || std::isinf(u) || std::isinf(v)) {
    throw ParameterError("Gini mean parameters must be finite");
  }
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (lo == hi) return {lo, Branch::Generic};
  if (lo == 0.0) {
    if (u < 0.0 || v < 0.0) throw DomainError("Gini mean with a negative exponent needs positive arguments");
    // 0^0 = 1 convention
    if (std::abs(u - v) < kParamEps) {
      const double s = 0.5 * (u + v);
      return {s > 0.0 ? hi : 0.0, Branch::LimitCase};
    }
    const double num = (u > 0.0 ? 0.0 : 1.0) + std::pow(hi, u);
    const double den = (v > 0.0 ? 0.0 : 1.0) + std::pow(hi, v);
    return {clamp_to(std::pow(num / den, 1.0 / (u - v)), lo, hi), Branch::Generic};
  }
  const double t = std::log(hi / lo);
  if (std::abs(u - v) < kParamEps) {
    const double s = 0.5 * (u + v);
    return {clamp_to(lo * std::exp(t * sigmoid(s * t)), lo, hi), Branch::LimitCase};
  }
  const double ln_ratio = (softplus(u * t) - softplus(v * t)) / (u - v);
  return {clamp_to(lo * std::exp(ln_ratio), lo, hi), Branch::Generic};
}

double weighted_geom(double a, double b, double x, double y) {
  check_weights(a, b);
  if ((x == 0.0 && a > 0.0) || (y == 0.0 && b > 0.0)) return 0.0;
  const double lx = a > 0.0 ? a * std::log(x) : 0.0;
  const double ly = b > 0.0 ? b * std::log(y) : 0.0;
  return clamp_to(std::exp(lx + ly), std::min(x, y), std::max(x, y));
}

}  // namespace

bool MeanSpec::symmetric() const {
  return std::visit(Overloaded{
                        [](const WeightedArith& w) { return w.a == w.b; },
                        [](const WeightedGeom& w) { return w.a == w.b; },
                        [](const QuasiArith& q) { return q.weights.size() == 2 && q.weights[0] == q.weights[1]; },
                        [](const Iterated& it) { return it.m->symmetric() && it.n->symmetric(); },
                        [](const auto&) { return true; },
                    },
                    kind);
}

std::string MeanSpec::name() const {
  return std::visit(Overloaded{
                        [](const Power& p) { return fmt::format("power({})", p.alpha); },
                        [](const Rado& r) { return fmt::format("rado({})", r.beta); },
                        [](const Gini& g) { return fmt::format("gini({},{})", g.u, g.v); },
                        [](const Lehmer& l) { return fmt::format("lehmer({})", l.u); },
                        [](const Heron&) { return std::string("heron"); },
                        [](const WeightedArith& w) { return fmt::format("weighted-arith({},{})", w.a, w.b); },
                        [](const WeightedGeom& w) { return fmt::format("weighted-geom({},{})", w.a, w.b); },
                        [](const QuasiArith& q) { return fmt::format("quasi({})", q.generator); },
                        [](const Iterated& it) { return fmt::format("iterated({},{})", it.m->name(), it.n->name()); },
                    },
                    kind);
}

MeanValueReport mean_eval(const MeanSpec& spec, double x, double y) {
  check_inputs(x, y);
  return std::visit(
      Overloaded{
          [&](const Power& p) { return power_mean(p.alpha, x, y); },
          [&](const Rado& r) { return rado_mean(r.beta, x, y); },
          [&](const Gini& g) { return gini_mean(g.u, g.v, x, y); },
          [&](const Lehmer& l) { return gini_mean(l.u + 1.0, l.u, x, y); },
          [&](const Heron&) {
            const double v = (x + std::sqrt(x) * std::sqrt(y) + y) / 3.0;
            return MeanValueReport{clamp_to(v, std::min(x, y), std::max(x, y)), Branch::Generic};
          },
          [&](const WeightedArith& w) {
            check_weights(w.a, w.b);
            return MeanValueReport{clamp_to(w.a * x + w.b * y, std::min(x, y), std::max(x, y)), Branch::Generic};
          },
          [&](const WeightedGeom& w) { return MeanValueReport{weighted_geom(w.a, w.b, x, y), Branch::Generic}; },
          [&](const QuasiArith& q) {
            if (q.weights.size() != 2) throw ParameterError("two-argument quasi-arithmetic mean needs two weights");
            return MeanValueReport{quasi_arithmetic_eval(generator_by_name(q.generator), q.weights, {x, y}),
                                   Branch::Generic};
          },
          [&](const Iterated& it) {
            if (x == 0.0 || y == 0.0) throw DomainError("iterated mean needs positive arguments");
            return MeanValueReport{iterate_mean(*it.m, *it.n, x, y, 1e-15).mu, Branch::Generic};
          },
      },
      spec.kind);
}

double rado_generic(double beta, double x, double y) {
  if (beta == 0.0 || beta == -1.0) {
    throw ParameterError(fmt::format("Rado beta = {} has no generic formula; use the closed form", beta));
  }
  check_inputs(x, y);
  if (x <= 0.0 || y <= 0.0) throw DomainError("rado_generic needs positive arguments");
  if (x == y) return x;
  return rado_generic_core(beta, std::min(x, y), std::max(x, y));
}

double mean_conjugate(const MeanSpec& spec, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("mean_conjugate needs positive arguments");
  const double m = mean_eval(spec, x, y).value;
  if (m == 0.0) throw DomainError("mean_conjugate: underlying mean is zero");
  return x / m * y;
}

Generator generator_by_name(const std::string& name) {
  auto id = [](double t) { return t; };
  if (name == "id") return {name, id, id};
  if (name == "ln") return {name, [](double t) { return std::log(t); }, [](double t) { return std::exp(t); }};
  if (name == "exp") return {name, [](double t) { return std::exp(t); }, [](double t) { return std::log(t); }};
  if (name == "inv") return {name, [](double t) { return 1.0 / t; }, [](double t) { return 1.0 / t; }};
  if (name == "sq") return {name, [](double t) { return t * t; }, [](double t) { return std::sqrt(t); }};
  if (name == "sqrt") return {name, [](double t) { return std::sqrt(t); }, [](double t) { return t * t; }};
  if (name.rfind("pow:", 0) == 0) {
    double p = 0.0;
    try {
      p = std::stod(name.substr(4));
    } catch (...) {
      throw ParameterError(fmt::format("bad generator exponent in '{}'", name));
    }
    if (p == 0.0 || !std::isfinite(p)) throw ParameterError("pow generator needs a finite nonzero exponent");
    return {name, [p](double t) { return std::pow(t, p); }, [p](double t) { return std::pow(t, 1.0 / p); }};
  }
  throw ParameterError(fmt::format("unknown generator '{}'", name));
}

double quasi_arithmetic_eval(const Generator& generator, const std::vector<double>& weights,
                             const std::vector<double>& xs) {
  if (xs.empty()) throw ParameterError("quasi_arithmetic_eval: no arguments");
  if (weights.size() != xs.size()) throw LengthMismatch("quasi_arithmetic_eval: weights and xs differ in length");
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ParameterError("quasi_arithmetic_eval: negative weight");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12) throw ParameterError(fmt::format("weights sum to {}, not 1", wsum));
  for (double x : xs) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("quasi_arithmetic_eval needs positive finite arguments");
  }
  const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
  const double lo = *mn;
  const double hi = *mx;
  if (lo == hi) return lo;

  // Strict monotonicity on the hull, checked on a uniform sample.
  constexpr int kChecks = 64;
  int direction = 0;
  double prev = generator.f(lo);
  for (int i = 1; i <= kChecks; ++i) {
    const double t = i == kChecks ? hi : lo + (hi - lo) * i / kChecks;
    const double cur = generator.f(t);
    const int d = cur > prev ? 1 : (cur < prev ? -1 : 0);
    if (!std::isfinite(cur) || d == 0 || (direction != 0 && d != direction)) {
      throw GeneratorError(fmt::format("generator '{}' is not strictly monotone on [{}, {}]", generator.name, lo, hi));
    }
    direction = d;
    prev = cur;
  }

  double target = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) target += weights[k] * generator.f(xs[k]);
  double z;
  if (generator.inverse) {
    z = generator.inverse(target);
  } else {
    const auto trace = solve::bisect_secant([&](double t) { return generator.f(t) - target; }, lo, hi,
                                            1e-13 * std::max(1.0, hi));
    z = trace.root();
  }
  return clamp_to(z, lo, hi);
}

IterateResult iterate_mean(const MeanSpec& m, const MeanSpec& n, double x0, double y0, double tol,
                           int max_iterations) {
  if (!(x0 > 0.0) || !(y0 > 0.0)) throw DomainError("iterate_mean needs positive starting values");
  if (!(tol > 0.0)) throw ParameterError("iterate_mean: tol must be positive");
  double x = x0;
  double y = y0;
  int it = 0;
  while (std::abs(x - y) > tol * std::max(x, y)) {
    if (it >= max_iterations) {
      throw NoConvergence(fmt::format("iterate_mean: gap {} after {} iterations", std::abs(x - y), it));
    }
    const double nx = mean_eval(m, x, y).value;
    const double ny = mean_eval(n, x, y).value;
    ++it;
    // A pair that stops moving has reached the rounding floor.
    if (nx == x && ny == y) break;
    x = nx;
    y = ny;
  }
  return {0.5 * (x + y), it};
}

double elliptic_K(double k) {
  if (!(k >= 0.0) || k >= 1.0) throw DomainError(fmt::format("elliptic_K needs 0 <= k < 1, got {}", k));
  const double kc2 = (1.0 - k) * (1.0 + k);
  auto integrand = [kc2](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(c * c + kc2 * s * s);
  };
  return numeric::integrate_adaptive(integrand, 0.0, std::numbers::pi / 2, 1e-14, 1e-15, 4000).value;
}

double agm_closed_form(double x0, double y0) {
  if (!(x0 > 0.0) || !(y0 > 0.0) || y0 > x0) throw DomainError("agm_closed_form needs 0 < y0 <= x0");
  const double r = y0 / x0;
  const double k = std::sqrt((1.0 - r) * (1.0 + r));
  return std::numbers::pi / 2 * x0 / elliptic_K(k);
}

double mean_profile_h(const MeanSpec& spec, double t) {
  const double et = std::exp(t);
  return mean_eval(spec, 1.0, et).value / (1.0 + et);
}

RadoBranch rado_branch(double alpha) {
  if (std::isnan(alpha)) throw ParameterError("rado_branch: alpha is NaN");
  // Exponent alpha ln 2 / ln(1 + alpha), extended by continuity to alpha = 0
  // (ln 2) and alpha = +inf (+inf).
  auto log_exponent = [](double a) {
    if (a == kInf) return kInf;
    if (std::abs(a) < kParamEps) return std::numbers::ln2;
    return a * std::numbers::ln2 / std::log1p(a);
  };
  auto third = [](double a) { return std::isinf(a) ? a : (a + 2.0) / 3.0; };
  if (alpha <= -2.0) return {third(alpha), 0.0};
  if (alpha <= -1.0) return {0.0, third(alpha)};
  if (alpha <= -0.5) return {log_exponent(alpha), third(alpha)};
  if (alpha < 1.0) return {third(alpha), log_exponent(alpha)};
  return {log_exponent(alpha), third(alpha)};
}

cert::Certificate check_rado_bounds(double alpha, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw ParameterError("check_rado_bounds: samples must be >= 1");
  const RadoBranch br = rado_branch(alpha);
  const numeric::CounterRng rng(seed);
  const auto lower = MeanSpec::power(br.lower_exponent);
  const auto upper = MeanSpec::power(br.upper_exponent);
  const auto rado = MeanSpec::rado(alpha);
  auto results = numeric::parallel_map<cert::Sample>(samples, [&](std::size_t i) {
    const double x = rng.log_uniform(2 * i, 1e-3, 1e3);
    const double y = rng.log_uniform(2 * i + 1, 1e-3, 1e3);
    const double r = mean_eval(rado, x, y).value;
    const double lo = mean_eval(lower, x, y).value;
    const double hi = mean_eval(upper, x, y).value;
    const double gap_lo = (r - lo) / r;
    const double gap_hi = (hi - r) / r;
    cert::Sample s;
    s.index = i;
    s.point = cert::Point::pair(x, y);
    if (gap_lo <= gap_hi) {
      s.lhs = lo;
      s.rhs = r;
      s.gap = gap_lo;
    } else {
      s.lhs = r;
      s.rhs = hi;
      s.gap = gap_hi;
    }
    s.tolerance = 1e-12;
    return s;
  });
  cert::CertificateBuilder builder(fmt::format("rado({})", alpha), seed, "log-uniform");
  for (const auto& s : results) builder.record(s);
  return builder.finish();
}

}  // namespace ineqlab::means
