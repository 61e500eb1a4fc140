#include "ineqlab/solve.hpp"

#include <cmath>
#include <fmt/format.h>

namespace ineqlab::solve {
namespace {

bool same_strict_sign(double a, double b) { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); }

}  // namespace

SolveTrace bisect(const ScalarFn& f, double lo, double hi, double tol, int max_iterations) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  const double fhi = f(hi);
  if (std::isnan(flo) || std::isnan(fhi) || same_strict_sign(flo, fhi)) {
    throw NoBracket(fmt::format("bisect: f({}) = {} and f({}) = {} do not bracket a root", lo, flo, hi, fhi));
  }
  SolveTrace trace;
  if (flo == 0.0 || fhi == 0.0) {
    trace.iterates.push_back(flo == 0.0 ? lo : hi);
    trace.brackets.push_back({lo, hi});
    trace.converged = true;
    trace.status = SolveStatus::Converged;
    return trace;
  }
  while (hi - lo > tol && trace.iterations < max_iterations) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket is down to adjacent doubles
    const double fmid = f(mid);
    ++trace.iterations;
    if (fmid == 0.0) {
      lo = hi = mid;
    } else if (same_strict_sign(fmid, flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    trace.iterates.push_back(lo + 0.5 * (hi - lo));
    trace.brackets.push_back({lo, hi});
  }
  trace.residual = hi - lo;
  if (trace.iterates.empty()) trace.iterates.push_back(lo + 0.5 * (hi - lo));
  trace.converged = trace.residual <= tol || std::nextafter(lo, hi) >= hi;
  trace.status = trace.converged ? SolveStatus::Converged : SolveStatus::NoConvergence;
  return trace;
}

SolveTrace bisect_secant(const ScalarFn& f, double lo, double hi, double tol, double switch_width) {
  SolveTrace coarse = bisect(f, lo, hi, std::max(switch_width, tol));
  if (coarse.brackets.empty() || coarse.residual <= tol) return coarse;
  double a = coarse.brackets.back().lo;
  double b = coarse.brackets.back().hi;
  double fa = f(a);
  double fb = f(b);
  SolveTrace trace = std::move(coarse);
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    double x = (fb != fa) ? b - fb * (b - a) / (fb - fa) : 0.5 * (a + b);
    // Keep the secant point strictly inside; fall back to the midpoint.
    if (!(x > a && x < b)) x = 0.5 * (a + b);
    const double fx = f(x);
    ++trace.iterations;
    trace.iterates.push_back(x);
    if (fx == 0.0) {
      a = b = x;
      break;
    }
    // Shrink from the side the secant point replaces, and also nudge the
    // opposite end so the bracket cannot stall on one side.
    if (same_strict_sign(fx, fa)) {
      a = x;
      fa = fx;
      const double probe = std::min(b, x + tol);
      const double fp = f(probe);
      if (!same_strict_sign(fp, fa)) {
        b = probe;
        fb = fp;
      }
    } else {
      b = x;
      fb = fx;
      const double probe = std::max(a, x - tol);
      const double fp = f(probe);
      if (!same_strict_sign(fp, fb)) {
        a = probe;
        fa = fp;
      }
    }
    trace.brackets.push_back({a, b});
  }
  trace.iterates.push_back(a + 0.5 * (b - a));
  trace.residual = b - a;
  trace.converged = trace.residual <= tol;
  trace.status = trace.converged ? SolveStatus::Converged : SolveStatus::NoConvergence;
  return trace;
}

SolveTrace newton(const ScalarFn& f, const ScalarFn& df, double x0, double tol, int max_iterations) {
  SolveTrace trace;
  double x = x0;
  trace.iterates.push_back(x);
  std::vector<double> steps;
  while (trace.iterations < max_iterations) {
    const double fx = f(x);
    if (fx == 0.0) {
      trace.converged = true;
      trace.residual = 0.0;
      break;
    }
    const double d = df(x);
    if (d == 0.0 || !std::isfinite(d)) {
      throw DerivativeZero(fmt::format("newton: derivative vanished at x = {}", x));
    }
    const double step = fx / d;
    x -= step;
    ++trace.iterations;
    trace.iterates.push_back(x);
    steps.push_back(std::abs(step));
    trace.residual = std::abs(step);
    if (!std::isfinite(x)) {
      trace.status = SolveStatus::Divergence;
      return trace;
    }
    if (trace.residual <= tol) {
      trace.converged = true;
      break;
    }
  }
  trace.status = trace.converged ? SolveStatus::Converged : SolveStatus::NoConvergence;
  if (trace.converged && steps.size() >= 4) {
    const std::size_t n = steps.size();
    const double r1 = steps[n - 2] / steps[n - 3];
    const double r2 = steps[n - 1] / steps[n - 2];
    trace.linear_tail = r1 > 0.1 && r2 > 0.1;
  }
  return trace;
}

SolveTrace fixed_point(const ScalarFn& g, double x0, double lambda, double tol, int max_iterations,
                       std::optional<Interval> hull) {
  if (max_iterations < 1) throw ParameterError("fixed_point: max_iterations must be >= 1");
  Interval box;
  if (hull) {
    box = *hull;
  } else if (x0 > 0.0) {
    box = {x0 / 1e6, x0 * 1e6};
  } else if (x0 < 0.0) {
    box = {x0 * 1e6, x0 / 1e6};
  } else {
    box = {-1e6, 1e6};
  }
  SolveTrace trace;
  double x = x0;
  trace.iterates.push_back(x);
  while (trace.iterations < max_iterations) {
    double gx;
    try {
      gx = g(x);
    } catch (const DomainError&) {
      trace.status = SolveStatus::Divergence;
      return trace;
    }
    const double next = x + lambda * (gx - x);
    ++trace.iterations;
    trace.iterates.push_back(next);
    trace.residual = std::abs(next - x);
    if (!std::isfinite(next) || next < box.lo || next > box.hi) {
      trace.status = SolveStatus::Divergence;
      return trace;
    }
    x = next;
    if (trace.residual <= tol) {
      trace.converged = true;
      trace.status = SolveStatus::Converged;
      return trace;
    }
  }
  trace.status = SolveStatus::NoConvergence;
  return trace;
}

double optimal_lambda(const ScalarFn& g, double x) {
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  const double slope = (g(x + h) - g(x - h)) / (2.0 * h);
  if (!std::isfinite(slope) || std::abs(1.0 - slope) < 1e-8) {
    throw DerivativeSingular(fmt::format("optimal_lambda: g'({}) = {} is too close to 1", x, slope));
  }
  return 1.0 / (1.0 - slope);
}

}  // namespace ineqlab::solve
