#include "ineqlab/complexregion.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <functional>
#include <numbers>

#include "ineqlab/solve.hpp"
#include "ineqlab/support/parallel.hpp"

namespace ineqlab::region {
namespace {

RegionVerdict classify(double residual, double tolerance) {
  RegionVerdict v;
  v.residual = residual;
  v.tolerance = tolerance;
  if (std::abs(residual) <= tolerance) {
    v.status = RegionStatus::Boundary;
  } else {
    v.status = residual > 0.0 ? RegionStatus::Outside : RegionStatus::Inside;
  }
  return v;
}

double amgm_residual(Complex s) { return std::norm((s + 1.0) / 2.0) - std::abs(s); }

// Maximal runs where f >= 0 on [-radius, radius]; sign changes are bisected.
void scan_axis(const std::function<double(double)>& f, double radius, int cells, std::vector<Interval>& holds,
               std::vector<double>& endpoints) {
  const double h = 2.0 * radius / cells;
  double a = -radius;
  double fa = f(a);
  bool in_run = fa >= 0.0;
  double run_start = -INFINITY;
  for (int i = 1; i <= cells; ++i) {
    const double b = -radius + h * i;
    const double fb = f(b);
    if ((fa >= 0.0) != (fb >= 0.0)) {
      const double root = solve::bisect(f, a, b, 1e-15 * std::max(1.0, std::abs(a))).root();
      endpoints.push_back(root);
      if (in_run) {
        holds.push_back({run_start, root});
      } else {
        run_start = root;
      }
      in_run = !in_run;
    }
    a = b;
    fa = fb;
  }
  if (in_run) holds.push_back({run_start, INFINITY});
}

double log_residual(Complex z) { return std::abs(z) - std::abs(log1p(z)); }

std::vector<double> ray_crossings(double theta) {
  constexpr int kSteps = 4000;
  constexpr double kMin = 1e-6;
  constexpr double kMax = 10.0;
  const Complex dir = std::polar(1.0, theta);
  auto f = [&](double r) {
    const Complex z = r * dir;
    return std::abs(z + 1.0) < 1e-9 ? NAN : log_residual(z);
  };
  std::vector<double> out;
  const double step = std::log(kMax / kMin) / kSteps;
  double a = kMin;
  double fa = f(a);
  for (int i = 1; i <= kSteps; ++i) {
    const double b = kMin * std::exp(step * i);
    const double fb = f(b);
    if (std::isfinite(fa) && std::isfinite(fb) && (fa > 0.0) != (fb > 0.0) && fa != 0.0 && fb != 0.0) {
      out.push_back(solve::bisect(f, a, b, 1e-14 * b).root());
    }
    a = b;
    fa = fb;
  }
  return out;
}

}  // namespace

const char* to_string(RegionStatus s) {
  switch (s) {
    case RegionStatus::Inside: return "inside";
    case RegionStatus::Boundary: return "boundary";
    case RegionStatus::Outside: return "outside";
  }
  return "?";
}

RegionVerdict amgm_classify(Complex s) {
  return classify(amgm_residual(s), 1e-9 * (1.0 + std::norm(s)));
}

double quartic_residual(Complex s) {
  const double x = s.real();
  const double y = s.imag();
  const double x2 = x * x;
  const double y2 = y * y;
  return x2 * x2 + y2 * y2 + 2.0 * x2 * y2 + 4.0 * x2 * x + 4.0 * x * y2 - 10.0 * x2 - 14.0 * y2 + 4.0 * x + 1.0;
}

double scaled_quartic_residual(Complex s) {
  const double n = std::norm(s);
  return quartic_residual(s) / (1.0 + n * n);
}

PolarRoots polar_curve(double phi) {
  const double c = 2.0 - std::cos(phi);
  const double d = std::sqrt((c - 1.0) * (c + 1.0));
  const double r_plus = c + d;
  return {1.0 / r_plus, r_plus};
}

AxisIntervals axis_intervals(double scan_radius, int cells) {
  if (!(scan_radius > 0.0) || cells < 2) throw ParameterError("axis_intervals needs radius > 0 and cells >= 2");
  AxisIntervals out;
  scan_axis([](double t) { return amgm_residual({t, 0.0}); }, scan_radius, cells, out.real_axis, out.real_endpoints);
  scan_axis([](double t) { return amgm_residual({0.0, t}); }, scan_radius, cells, out.imag_axis, out.imag_endpoints);
  return out;
}

RegionVerdict amgm_modulus_classify(Complex s) {
  const double t = std::abs(s);
  const double half = (t - 1.0) / 2.0;
  return classify(half * half, 1e-9 * (1.0 + t * t));
}

Complex log1p(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  // |1+z|^2 - 1 = 2x + x^2 + y^2
  const double re = 0.5 * std::log1p(2.0 * x + x * x + y * y);
  return {re, std::atan2(y, 1.0 + x)};
}

RegionVerdict log_classify(Complex z) {
  if (std::abs(z + 1.0) < 1e-9) throw DomainError("ln(1+z) is singular at z = -1");
  return classify(log_residual(z), 1e-9 * (1.0 + std::abs(z)));
}

Complex Grid::node(int i, int j) const {
  const double re = nx > 1 ? re_lo + (re_hi - re_lo) * i / (nx - 1) : re_lo;
  const double im = ny > 1 ? im_lo + (im_hi - im_lo) * j / (ny - 1) : im_lo;
  return {re, im};
}

namespace {

void check_grid(const Grid& g) {
  if (g.nx < 1 || g.ny < 1) throw ParameterError("grid needs at least one node per axis");
  if (!(g.re_lo <= g.re_hi) || !(g.im_lo <= g.im_hi)) throw ParameterError("grid bounds are reversed");
}

}  // namespace

LogScan log_region_scan(const Grid& grid, int rays) {
  check_grid(grid);
  if (rays < 0) throw ParameterError("ray count must be non-negative");
  const auto rows = numeric::parallel_map<std::vector<ScanPoint>>(static_cast<std::size_t>(grid.ny), [&](std::size_t j) {
    std::vector<ScanPoint> row;
    row.reserve(static_cast<std::size_t>(grid.nx));
    for (int i = 0; i < grid.nx; ++i) {
      const Complex z = grid.node(i, static_cast<int>(j));
      if (std::abs(z + 1.0) < 1e-9) continue;
      row.push_back({z, log_classify(z)});
    }
    return row;
  });
  LogScan scan;
  for (const auto& row : rows) {
    for (const auto& p : row) {
      if (p.verdict.status == RegionStatus::Inside) ++scan.failures;
      scan.points.push_back(p);
    }
  }
  scan.rays = numeric::parallel_map<RayCrossing>(static_cast<std::size_t>(rays), [&](std::size_t k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / rays;
    return RayCrossing{theta, ray_crossings(theta)};
  });
  return scan;
}

EpsValue eps_complex(Complex z) {
  if (z.imag() == 0.0 && z.real() >= -1.0 && z.real() <= 0.0) {
    throw DomainError(fmt::format("eps(z) is undefined on the cut [-1, 0], got {}", z.real()));
  }
  if (std::abs(z) < 1e-12 || std::abs(z + 1.0) < 1e-12) throw DomainError("eps(z): too close to -1 or 0");
  Complex value;
  if (std::abs(z) > 1e3) {
    const Complex t = 1.0 / z;
    value = 0.5 + t * (-1.0 / 12.0 + t * (1.0 / 24.0 + t * (-19.0 / 720.0 + t * (3.0 / 160.0 - t * 863.0 / 60480.0))));
  } else {
    value = 1.0 / log1p(1.0 / z) - z;
  }
  return {value, std::abs(value)};
}

EpsSup eps_complex_sup(const Grid& grid) {
  check_grid(grid);
  EpsSup best;
  best.sup = -INFINITY;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Complex z = grid.node(i, j);
      EpsValue e;
      try {
        e = eps_complex(z);
      } catch (const DomainError&) {
        continue;
      }
      ++best.evaluated;
      if (e.modulus > best.sup) {
        best.sup = e.modulus;
        best.argsup = z;
      }
    }
  }
  return best;
}

}  // namespace ineqlab::region
