#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ineqlab/errors.hpp"

/// Complexified inequalities: |s| <= |(s+1)/2|^2 and its boundary quartic,
/// |ln(1+z)| <= |z|, and eps(z) = 1/ln(1 + 1/z) - z. Principal branch of the
/// logarithm throughout.
namespace ineqlab::region {

using Complex = std::complex<double>;

/// Outside: the inequality holds strictly. Inside: it fails.
enum class RegionStatus { Inside, Boundary, Outside };

const char* to_string(RegionStatus s);

struct RegionVerdict {
  RegionStatus status = RegionStatus::Boundary;
  double residual = 0.0;  // rhs - lhs
  double tolerance = 0.0;

  [[nodiscard]] bool holds() const { return status != RegionStatus::Inside; }
};

/// residual = |(s+1)/2|^2 - |s|, Boundary when |residual| <= 1e-9 (1 + |s|^2).
RegionVerdict amgm_classify(Complex s);

/// x^4 + y^4 + 2x^2y^2 + 4x^3 + 4xy^2 - 10x^2 - 14y^2 + 4x + 1 at s = x + iy.
double quartic_residual(Complex s);
/// quartic_residual / (1 + |s|^4).
double scaled_quartic_residual(Complex s);

struct PolarRoots {
  double r_minus = 0.0;
  double r_plus = 0.0;
};

/// Roots of r^2 - 2(2 - cos phi) r + 1 = 0, the boundary in polar form.
PolarRoots polar_curve(double phi);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Holds-intervals of |s| <= |(s+1)/2|^2 on the real axis and on the
/// imaginary axis (as Im s), with the crossing points found by a sign scan on
/// [-scan_radius, scan_radius] and bisection.
struct AxisIntervals {
  std::vector<Interval> real_axis;
  std::vector<Interval> imag_axis;
  std::vector<double> real_endpoints;
  std::vector<double> imag_endpoints;
};

AxisIntervals axis_intervals(double scan_radius = 50.0, int cells = 20000);

/// residual = ((|s|+1)/2)^2 - |s| = ((|s|-1)/2)^2.
RegionVerdict amgm_modulus_classify(Complex s);

/// ln(1+z) accurate for small |z|.
Complex log1p(Complex z);

/// residual = |z| - |ln(1+z)|, Boundary within 1e-9 (1 + |z|). Throws
/// DomainError within 1e-9 of the branch point z = -1.
RegionVerdict log_classify(Complex z);

struct Grid {
  double re_lo = -3.0;
  double re_hi = 3.0;
  double im_lo = -3.0;
  double im_hi = 3.0;
  int nx = 101;
  int ny = 101;

  /// Node (i, j), i along re, j along im; endpoints included.
  [[nodiscard]] Complex node(int i, int j) const;
};

struct ScanPoint {
  Complex z;
  RegionVerdict verdict;
};

struct RayCrossing {
  double theta = 0.0;
  std::vector<double> radii;  // where the sign of the residual changes
};

struct LogScan {
  std::vector<ScanPoint> points;  // row-major, im rows outer; punctured nodes omitted
  std::vector<RayCrossing> rays;
  std::size_t failures = 0;
};

/// Grid verdicts plus, along `rays` equally spaced directions from 0, the
/// radii in [1e-6, 10] where the residual changes sign.
LogScan log_region_scan(const Grid& grid, int rays);

struct EpsValue {
  Complex value;
  double modulus = 0.0;
};

/// eps(z) = 1/ln(1 + 1/z) - z off the cut [-1, 0]; an asymptotic series in
/// 1/z for |z| > 1e3. Throws DomainError on the cut.
EpsValue eps_complex(Complex z);

struct EpsSup {
  double sup = 0.0;
  Complex argsup;
  std::size_t evaluated = 0;
};

/// Largest |eps(z)| over grid nodes off the cut.
EpsSup eps_complex_sup(const Grid& grid);

}  // namespace ineqlab::region
