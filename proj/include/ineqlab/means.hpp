#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ineqlab/certificate.hpp"
#include "ineqlab/errors.hpp"

/// Two-argument means: power, Rado, Gini, Lehmer, Heron, weighted, quasi-
/// arithmetic and iterated (AGM-type) means, with conjugates and profiles.
namespace ineqlab::means {

struct MeanSpec;

/// M_alpha(x, y) = ((x^a + y^a) / 2)^(1/a); alpha = +-inf gives max / min.
struct Power {
  double alpha;
};
/// R_beta(x, y) = ((x^(b+1) - y^(b+1)) / ((b+1)(x - y)))^(1/b);
/// beta = -1 is the logarithmic mean, beta = 0 the identric mean.
struct Rado {
  double beta;
};
/// Gi_{u,v}(x, y) = ((x^u + y^u) / (x^v + y^v))^(1/(u - v)).
struct Gini {
  double u;
  double v;
};
/// Le_u(x, y) = (x^(u+1) + y^(u+1)) / (x^u + y^u).
struct Lehmer {
  double u;
};
/// He(x, y) = (x + sqrt(xy) + y) / 3.
struct Heron {};
struct WeightedArith {
  double a;
  double b;
};
struct WeightedGeom {
  double a;
  double b;
};
/// f^{-1}(w1 f(x) + w2 f(y)) for a named generator f.
struct QuasiArith {
  std::string generator;
  std::vector<double> weights;
};
/// Common limit of x <- m(x, y), y <- n(x, y).
struct Iterated {
  std::shared_ptr<const MeanSpec> m;
  std::shared_ptr<const MeanSpec> n;
};

struct MeanSpec {
  std::variant<Power, Rado, Gini, Lehmer, Heron, WeightedArith, WeightedGeom, QuasiArith, Iterated> kind;

  static MeanSpec power(double alpha) { return {Power{alpha}}; }
  static MeanSpec rado(double beta) { return {Rado{beta}}; }
  static MeanSpec gini(double u, double v) { return {Gini{u, v}}; }
  static MeanSpec lehmer(double u) { return {Lehmer{u}}; }
  static MeanSpec heron() { return {Heron{}}; }
  static MeanSpec weighted_arith(double a, double b) { return {WeightedArith{a, b}}; }
  static MeanSpec weighted_geom(double a, double b) { return {WeightedGeom{a, b}}; }
  static MeanSpec quasi(std::string generator, std::vector<double> weights = {0.5, 0.5}) {
    return {QuasiArith{std::move(generator), std::move(weights)}};
  }
  static MeanSpec iterated(MeanSpec m, MeanSpec n) {
    return {Iterated{std::make_shared<const MeanSpec>(std::move(m)), std::make_shared<const MeanSpec>(std::move(n))}};
  }

  [[nodiscard]] bool symmetric() const;
  [[nodiscard]] std::string name() const;
};

enum class Branch { Generic, LimitCase };

struct MeanValueReport {
  double value = 0.0;
  Branch branch = Branch::Generic;
};

/// Evaluates a mean. Removable singularities (alpha -> 0, beta in {0, -1},
/// x -> y) are served by their limit formulas and reported as LimitCase.
MeanValueReport mean_eval(const MeanSpec& spec, double x, double y);

/// Radó mean through the generic formula only; throws ParameterError at
/// beta in {0, -1}, where the closed forms in mean_eval apply instead.
double rado_generic(double beta, double x, double y);

/// xy / M(x, y).
double mean_conjugate(const MeanSpec& spec, double x, double y);

struct Generator {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> inverse;  // may be empty
};

/// Known generators: id, ln, exp, inv (1/x), sq, sqrt, pow:<p>.
Generator generator_by_name(const std::string& name);

/// f^{-1}(sum w_k f(x_k)). The inverse is used when available, otherwise the
/// equation f(z) = target is solved on [min xs, max xs].
double quasi_arithmetic_eval(const Generator& generator, const std::vector<double>& weights,
                             const std::vector<double>& xs);

struct IterateResult {
  double mu = 0.0;
  int iterations = 0;
};

/// Iterates the pair until |x_k - y_k| <= tol * max(x_k, y_k); throws
/// NoConvergence after `max_iterations` steps.
IterateResult iterate_mean(const MeanSpec& m, const MeanSpec& n, double x0, double y0, double tol,
                           int max_iterations = 200);

/// Complete elliptic integral of the first kind K(k), 0 <= k < 1, by
/// adaptive quadrature.
double elliptic_K(double k);

/// Gauss's closed form (pi/2) x0 / K(sqrt(1 - (y0/x0)^2)) for 0 < y0 <= x0.
double agm_closed_form(double x0, double y0);

/// h(t) = M(1, e^t) / (1 + e^t).
double mean_profile_h(const MeanSpec& spec, double t);

struct RadoBranch {
  double lower_exponent;
  double upper_exponent;
};

/// Power-mean exponents (p, q) with M_p <= R_alpha <= M_q.
RadoBranch rado_branch(double alpha);

/// Certifies M_p(x, y) <= R_alpha(x, y) <= M_q(x, y) on log-uniform pairs in
/// [1e-3, 1e3]^2. The recorded gap is the smaller relative slack
/// min(R - M_p, M_q - R) / R; a violation is a slack below -1e-12.
cert::Certificate check_rado_bounds(double alpha, std::uint64_t samples, std::uint64_t seed);

}  // namespace ineqlab::means
