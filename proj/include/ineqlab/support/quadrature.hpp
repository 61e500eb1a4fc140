#pragma once

#include <functional>
#include <vector>

namespace ineqlab::numeric {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature. The interval with
/// the largest local error is split until the summed error estimate drops
/// below max(abs_tol, rel_tol * |I|) or max_intervals is reached.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol = 0.0, int max_intervals = 2000);

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule; exact for polynomials of degree <= 2n - 1.
GaussRule gauss_legendre(int n);

double integrate_gauss(const std::function<double(double)>& f, double a, double b, const GaussRule& rule);

}  // namespace ineqlab::numeric
