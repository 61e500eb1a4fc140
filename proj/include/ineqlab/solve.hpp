#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ineqlab/errors.hpp"

/// Scalar root finding and fixed-point iteration, including the accelerated
/// iteration x <- x + lambda * (g(x) - x) and the lambda that removes its
/// linear error term.
namespace ineqlab::solve {

using ScalarFn = std::function<double(double)>;

enum class SolveStatus { Converged, NoConvergence, Divergence };

struct Bracket {
  double lo;
  double hi;
};

/// Record of one solver run. `residual` is the convergence measure of the
/// method: final bracket width for bisection, last step length otherwise.
struct SolveTrace {
  std::vector<double> iterates;
  std::vector<Bracket> brackets;  // bisection only: bracket after each halving
  bool converged = false;
  SolveStatus status = SolveStatus::NoConvergence;
  double residual = 0.0;
  int iterations = 0;
  /// Set by newton when the step ratio of the converged tail stays above 0.1,
  /// the signature of a multiple root.
  bool linear_tail = false;

  [[nodiscard]] double root() const { return iterates.empty() ? 0.0 : iterates.back(); }
};

/// Bisection until hi - lo <= tol. Throws NoBracket when f(lo) and f(hi)
/// have the same strict sign.
SolveTrace bisect(const ScalarFn& f, double lo, double hi, double tol, int max_iterations = 2000);

/// Bisection down to a bracket of width `switch_width`, then secant steps
/// safeguarded to stay inside the bracket.
SolveTrace bisect_secant(const ScalarFn& f, double lo, double hi, double tol, double switch_width = 1e-3);

/// Newton's method; converges when |step| <= tol. Throws DerivativeZero when
/// df vanishes on the path.
SolveTrace newton(const ScalarFn& f, const ScalarFn& df, double x0, double tol, int max_iterations = 200);

struct Interval {
  double lo;
  double hi;
};

/// Iterates x <- x + lambda * (g(x) - x) until |x_{k+1} - x_k| <= tol.
/// lambda = 1 is plain iteration x <- g(x). Leaving `hull` (default
/// [x0 / 1e6, x0 * 1e6] for x0 > 0) or producing a non-finite value ends the
/// run with status Divergence.
SolveTrace fixed_point(const ScalarFn& g, double x0, double lambda, double tol, int max_iterations,
                       std::optional<Interval> hull = std::nullopt);

/// 1 / (1 - g'(x)) with g' by central differences (step 1e-6 * max(1, |x|)).
/// Throws DerivativeSingular when g'(x) is within 1e-8 of 1.
double optimal_lambda(const ScalarFn& g, double x);

}  // namespace ineqlab::solve
