#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ineqlab/bound_family.hpp"
#include "ineqlab/errors.hpp"

/// Rational and algebraic bounds for ln(1+x), ln(1+1/x) and e, their
/// deviation functions, and the continued-fraction convergents of ln(1+x).
namespace ineqlab::logbounds {

/// All registered families, in a fixed order.
const std::vector<BoundFamily>& bound_registry();

/// Throws ParameterError for unknown ids.
const BoundFamily& find_family(const std::string& id);

struct ChainInfo {
  std::string id;
  Domain domain;
  bool increasing;  // values listed from smallest to largest
  std::string formula;
};

const std::vector<ChainInfo>& chain_registry();

/// Every expression of a chain of inequalities at x, in the chain's order.
/// Throws DomainError outside the chain's domain.
std::vector<std::pair<std::string, double>> eval_chain(const std::string& chain_id, double x);

/// Deviation functions: log_sqrt, pade2, e_exponent, sqrt_pair, mid_pair.
double eps_eval(const std::string& family, double x);
const std::vector<std::string>& eps_families();

/// eps_n(x) = 1 / sum_{j<=n} (-1)^(j-1) / (j x^j) - x for n >= 1, x >= 1.
double eps_taylor_bound(int n, double x);

/// Convergent R_n = P_n / Q_n of ln(1+x) = x/(1 + x/(2 + x/(3 + 4x/(4 + ...)))).
/// Coefficients are listed from the constant term up. Up to n = 30 they are
/// exact integers with common content removed; beyond that only the long
/// double coefficients are filled and `exact` is false.
struct Convergent {
  int n = 0;
  bool exact = true;
  std::vector<std::int64_t> p_coeffs;
  std::vector<std::int64_t> q_coeffs;
  std::vector<long double> p_float;
  std::vector<long double> q_float;
};

inline constexpr int kExactConvergentLimit = 30;

Convergent cf_convergent(int n);

/// R_n(x) by the numeric three-term recurrence, x > -1.
double cf_eval(int n, double x);

/// Sign of R_n(x) - R_m(x); m = 0 stands for ln(1+x) itself. Runs in
/// multiprecision with enough bits to resolve the x^(n+1)-sized gaps near
/// x = 0 that double arithmetic rounds away.
int cf_compare(int n, int m, double x);

/// sum_k x^k / sqrt(k!), summed until k > x^2 and |term| < tol * |partial|.
/// Negative x runs in multiprecision to survive the alternating cancellation.
double sqrt_factorial_series(double x, double tol = 1e-17);

}  // namespace ineqlab::logbounds
