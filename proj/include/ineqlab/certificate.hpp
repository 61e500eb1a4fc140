#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace ineqlab::cert {

/// Sample location: a real x (dim 1) or a pair / complex number (dim 2).
struct Point {
  double x = 0.0;
  double y = 0.0;
  int dim = 1;

  static Point scalar(double x) { return {x, 0.0, 1}; }
  static Point pair(double x, double y) { return {x, y, 2}; }
};

struct Counterexample {
  std::uint64_t index = 0;
  Point point;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

/// Outcome of sampling an inequality lhs <= rhs. `worst_gap` is the minimum
/// of the per-sample gap (rhs - lhs for plain families).
struct Certificate {
  static constexpr std::size_t kRetained = 32;

  std::string family_id;
  std::string strategy;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool holds = true;
  double worst_gap = std::numeric_limits<double>::infinity();
  Point worst_point;
  /// The kRetained samples with the most negative gap, ordered by gap then index.
  std::vector<Counterexample> counterexamples;
  std::uint64_t violations = 0;
  /// Index of the earliest violating sample.
  std::optional<std::uint64_t> first_violation;
  /// Samples of a strict family whose gap is zero or negative but within tolerance.
  std::uint64_t strict_violations = 0;
};

struct Sample {
  std::uint64_t index = 0;
  Point point;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tolerance = 0.0;  // violation when gap < -tolerance
  bool strict = false;
};

/// Folds samples, fed in index order, into a Certificate.
class CertificateBuilder {
 public:
  CertificateBuilder(std::string family_id, std::uint64_t seed, std::string strategy);

  void record(const Sample& s);
  Certificate finish();

 private:
  void trim();

  Certificate cert_;
};

/// Default scale-aware tolerance for an absolute gap.
inline double scaled_tolerance(double lhs, double rhs) {
  return 1e-12 * (std::abs(lhs) + std::abs(rhs) + 1.0);
}

}  // namespace ineqlab::cert
