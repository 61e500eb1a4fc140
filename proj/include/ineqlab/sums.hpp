#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ineqlab/errors.hpp"

/// Integral-test enclosures for sums of positive decreasing terms, Euler
/// constants of series, and two-sided bounds for partial sums.
namespace ineqlab::sums {

using ScalarFn = std::function<double(double)>;

/// A series sum_{k=start}^n f(k) with antiderivative F normalized to
/// F(start) = 0.
struct SeriesModel {
  std::string id;
  ScalarFn term;
  ScalarFn antiderivative;
  std::vector<double> params;
  long start = 1;
  bool divergent = true;
  std::string description;
};

/// Validates positivity, strict decrease, F(start) = 0 and F' = f (central
/// differences, 1e-6 relative) on sample points; throws ConstructionError.
SeriesModel make_model(std::string id, ScalarFn term, ScalarFn antiderivative, long start,
                       std::vector<double> params = {}, bool divergent = true, std::string description = {});

SeriesModel harmonic_model();
/// sum 1/sqrt(k(k+1)), F(x) = 2 ln((sqrt(x) + sqrt(x+1)) / (1 + sqrt 2)).
SeriesModel p_series_model();
/// sum 1/k^tau, 0 < tau < 1.
SeriesModel q_model(double tau);
/// sum_{k>=2} 1/sqrt(k^2 - 1), F(x) = ln(x + sqrt(x^2-1)) - ln(2 + sqrt 3).
SeriesModel extra_model();
/// sum_{k>=2} 1/(k ln k), F(x) = ln ln x - ln ln 2.
SeriesModel k_log_k_model();
/// sum k^a for a < 0.
SeriesModel power_model(double a);

/// The default registry: harmonic, p-series, q(0.5), extra, klogk, power(-2).
std::vector<SeriesModel> series_registry();

/// Accepts "harmonic", "p-series", "q:<tau>", "extra", "klogk", "power:<a>".
SeriesModel model_by_name(const std::string& name);

/// Compensated sum of f(k), k = start..n, smallest terms first.
double partial_sum(const SeriesModel& model, long n);

/// S(start), S(start+1), ..., S(n_max) by forward compensated accumulation.
std::vector<double> partial_sums(const SeriesModel& model, long n_max);

struct ConstantEnclosure {
  double lower = 0.0;  // S(n) - F(n+1)
  double upper = 0.0;  // S(n) - F(n)
  long n_used = 0;
  [[nodiscard]] double width() const { return upper - lower; }
  [[nodiscard]] double midpoint() const { return 0.5 * (lower + upper); }
};

ConstantEnclosure euler_constant(const SeriesModel& model, long n);

struct SlResult {
  double lower = 0.0;
  double sum = 0.0;
  double upper = 0.0;
  bool holds = false;
  bool lower_equality = false;  // sum == lower exactly
  bool upper_equality = false;
};

/// F(n) + c_lo < S(n) < F(n) + c_hi.
SlResult sl_bounds(const SeriesModel& model, long n, double c_lo, double c_hi);

/// A named two-sided bound lower(n) (<|<=) S(n) (<|<=) upper(n) for n >= n_min.
struct SlFixture {
  std::string id;
  std::string model;
  std::function<double(long)> lower;
  std::function<double(long)> upper;
  bool lower_strict = true;
  bool upper_strict = true;
  long n_min = 1;
  std::string formula;
};

std::vector<SlFixture> sl_fixtures();
const SlFixture& find_fixture(const std::string& id);

/// Evaluates a fixture given the partial sum S(n).
SlResult eval_fixture(const SlFixture& fx, long n, double sum);

/// Limit of P_n - ln n from the p-series enclosure, and the same limit as
/// Euler's constant minus A = sum 1/(k sqrt(k+1)(sqrt(k+1) + sqrt k)).
struct PnDecomposition {
  double c1_estimate = 0.0;
  double c_minus_a = 0.0;
  double a_sum = 0.0;
  double enclosure_width = 0.0;
};

PnDecomposition pn_constant_decomposition(long n);

/// Partial sum of the A series up to k = n.
double a_series_partial(long n);
/// Full A series: 10^6 terms plus an asymptotic tail.
double a_series_total();

/// A_k = (1/k) int_0^1 x(1-x)(2-x)...(k-1-x) dx by Gauss-Legendre.
double expansion_coefficient_A(int k);

/// q_1(n) = n (S_n - C - ln n), q_2(n) = n^2 (S_n - C - ln n - 1/(2n)).
std::vector<double> asymptotic_sequence(int order, const std::vector<long>& n_grid, double c);

/// Neville extrapolation in h = 1/n of asymptotic_sequence to h = 0. When c
/// is omitted it is the midpoint of the harmonic enclosure at n = 10^6.
/// Throws ExtrapolationUnstable when the successive corrections grow.
double asymptotic_limit(int order, const std::vector<long>& n_grid, std::optional<double> c = std::nullopt);

/// sum_{k<=n} k^-a - n^(1-a)/(1-a) - n^-a/2 for 0 < a < 1.
double zeta_continuation(double a, long n);

}  // namespace ineqlab::sums
