#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ineqlab/errors.hpp"

namespace ineqlab::classic {

/// lhs <= rhs for a finite-vector inequality. `holds` allows 1e-12 relative
/// slack; `equality` is set when |lhs - rhs| <= 1e-10 rhs.
struct VectorCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  bool equality = false;
};

/// |sum u_i v_i| <= sqrt(sum u_i^2 * sum v_i^2).
VectorCheck cauchy_bunyakovsky(const std::vector<double>& u, const std::vector<double>& v);

/// ||u + v||_2 <= ||u||_2 + ||v||_2.
VectorCheck minkowski(const std::vector<double>& u, const std::vector<double>& v);

/// |sum u_i v_i| <= ||u||_p ||v||_q with 1/p + 1/q = 1. p = 2 is evaluated by
/// cauchy_bunyakovsky. Throws ParameterError for p <= 1.
VectorCheck holder(const std::vector<double>& u, const std::vector<double>& v, double p);

enum class YoungBetter { PQ, QP, Tie };
enum class YoungCase { BothAtLeastOne, BothAtMostOne, Straddle };

const char* to_string(YoungBetter b);
const char* to_string(YoungCase c);

/// Both Young bounds for xy. rhs_pq = x^p/p + y^q/q, rhs_qp = x^q/q + y^p/p;
/// `better` names the smaller one. In the straddle case y_cr is the value of
/// max(x, y) > 1 at which the two bounds coincide for the given min(x, y).
struct YoungVerdict {
  double x = 0.0;
  double y = 0.0;
  double p = 0.0;
  double q = 0.0;
  double product = 0.0;
  double rhs_pq = 0.0;
  double rhs_qp = 0.0;
  YoungBetter better = YoungBetter::Tie;
  YoungCase young_case = YoungCase::BothAtLeastOne;
  std::optional<double> y_cr;
};

YoungVerdict young_compare(double x, double y, double p);

/// Root t >= 1 of t^p/p - t^q/q = x^p/p - x^q/q for 0 < x < 1. Newton from
/// the outer end of a doubling bracket on [1, max(hint, 10)], bisection when
/// Newton leaves the bracket. Throws ParameterError for p == 2 (no crossing).
double young_critical(double x, double p, double hint = 10.0);

/// t^p/p - t^q/q.
double young_h(double t, double p);

struct InductionCheck {
  std::string id;
  std::string formula;
  long n_lo = 0;
  long n_hi = 0;
  long violations = 0;
  double worst_margin = 0.0;
  long worst_n = 0;
};

/// n! < (n/2)^n, checked in log form via lgamma.
InductionCheck factorial_half_power(long n_lo, long n_hi);
/// sum_{k<=n} 1/k^2 <= 2 - 1/n.
InductionCheck inverse_squares(long n_lo, long n_hi);
/// (1/2)(3/4)...((2n-1)/(2n)) <= 1/sqrt(3n+1).
InductionCheck odd_even_product(long n_lo, long n_hi);

}  // namespace ineqlab::classic
