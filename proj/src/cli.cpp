#include "ineqlab/cli.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ineqlab/cert.hpp"
#include "ineqlab/classic.hpp"
#include "ineqlab/complexregion.hpp"
#include "ineqlab/logbounds.hpp"
#include "ineqlab/means.hpp"
#include "ineqlab/solve.hpp"
#include "ineqlab/sums.hpp"
#include "ineqlab/zeta.hpp"
#include "report.hpp"

namespace ineqlab::cli {
namespace {

using Action = std::function<Report()>;

struct Runner {
  Action action;
};

template <class T>
std::shared_ptr<T> make() {
  return std::make_shared<T>();
}

// ---- shared conversions ----------------------------------------------------

Json point_json(const cert::Point& p) {
  if (p.dim == 1) return p.x;
  return Json{{"re", p.x}, {"im", p.y}};
}

Report certificate_report(const cert::Certificate& c) {
  Report r;
  r.meta["family"] = c.family_id;
  r.meta["strategy"] = c.strategy;
  r.meta["samples"] = c.samples;
  r.meta["seed"] = c.seed;
  r.meta["holds"] = c.holds;
  r.meta["worst_gap"] = c.worst_gap;
  r.meta["worst_point"] = point_json(c.worst_point);
  r.meta["violations"] = c.violations;
  r.meta["strict_violations"] = c.strict_violations;
  r.meta["first_violation"] = c.first_violation ? Json(*c.first_violation) : Json(nullptr);
  const bool pair = !c.counterexamples.empty() && c.counterexamples.front().point.dim == 2;
  r.columns = pair ? std::vector<std::string>{"index", "re", "im", "lhs", "rhs", "gap"}
                   : std::vector<std::string>{"index", "x", "lhs", "rhs", "gap"};
  for (const auto& ce : c.counterexamples) {
    if (pair) {
      r.add_row({ce.index, ce.point.x, ce.point.y, ce.lhs, ce.rhs, ce.gap});
    } else {
      r.add_row({ce.index, ce.point.x, ce.lhs, ce.rhs, ce.gap});
    }
  }
  r.rows_key = "counterexamples";
  r.exit_code = c.holds ? kExitOk : kExitCounterexample;
  return r;
}

Report value_report(const std::string& key, double value) {
  Report r;
  r.meta[key] = value;
  r.primary = key;
  return r;
}

std::string domain_text(const logbounds::Domain& d) {
  return fmt::format("{}{}, {}{}", d.lo_closed ? '[' : '(', d.lo, d.hi, d.hi_closed ? ']' : ')');
}

std::string poly_text(const std::vector<std::int64_t>& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const std::int64_t a = c[k] < 0 ? -c[k] : c[k];
    if (s.empty()) {
      if (c[k] < 0) s += "-";
    } else {
      s += c[k] < 0 ? " - " : " + ";
    }
    const std::string mon = k == 0 ? "" : (k == 1 ? "x" : fmt::format("x^{}", k));
    if (k == 0 || a != 1) {
      s += std::to_string(a);
    }
    s += mon;
  }
  return s.empty() ? "0" : s;
}

// ---- means -----------------------------------------------------------------

struct MeanFlags {
  std::string kind = "power";
  double alpha = 1.0;
  double beta = 1.0;
  double u = 1.0;
  double v = 0.0;
  double a = 0.5;
  double b = 0.5;
  std::string generator = "id";
};

void add_mean_flags(CLI::App* sub, MeanFlags& f) {
  sub->add_option("--kind", f.kind,
                  "power, rado, gini, lehmer, heron, warith, wgeom, quasi, arith, geom, harm, log, identric")
      ->capture_default_str();
  sub->add_option("--alpha", f.alpha, "power mean exponent")->capture_default_str();
  sub->add_option("--beta", f.beta, "Rado parameter")->capture_default_str();
  sub->add_option("--u", f.u, "Gini / Lehmer parameter u")->capture_default_str();
  sub->add_option("--v", f.v, "Gini parameter v")->capture_default_str();
  sub->add_option("--a", f.a, "weight of x")->capture_default_str();
  sub->add_option("--b", f.b, "weight of y")->capture_default_str();
  sub->add_option("--generator", f.generator, "quasi-arithmetic generator: id, ln, exp, inv, sq, sqrt, pow:<p>")
      ->capture_default_str();
}

means::MeanSpec mean_from_flags(const MeanFlags& f) {
  using means::MeanSpec;
  if (f.kind == "power") return MeanSpec::power(f.alpha);
  if (f.kind == "rado") return MeanSpec::rado(f.beta);
  if (f.kind == "gini") return MeanSpec::gini(f.u, f.v);
  if (f.kind == "lehmer") return MeanSpec::lehmer(f.u);
  if (f.kind == "heron") return MeanSpec::heron();
  if (f.kind == "warith") return MeanSpec::weighted_arith(f.a, f.b);
  if (f.kind == "wgeom") return MeanSpec::weighted_geom(f.a, f.b);
  if (f.kind == "quasi") return MeanSpec::quasi(f.generator, {f.a, f.b});
  if (f.kind == "arith") return MeanSpec::power(1.0);
  if (f.kind == "geom") return MeanSpec::power(0.0);
  if (f.kind == "harm") return MeanSpec::power(-1.0);
  if (f.kind == "log") return MeanSpec::rado(-1.0);
  if (f.kind == "identric") return MeanSpec::rado(0.0);
  throw ParameterError(fmt::format("unknown mean kind '{}'", f.kind));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError(fmt::format("'{}' is not a number", item));
    }
  }
  return out;
}

/// "power:0.5", "rado:-1", "gini:2,1", "lehmer:1", "heron", "arith", "geom",
/// "harm", "log", "identric", "quasi:<generator>".
means::MeanSpec parse_mean(const std::string& text) {
  const auto colon = text.find(':');
  MeanFlags f;
  f.kind = text.substr(0, colon);
  if (colon != std::string::npos) {
    const std::string arg = text.substr(colon + 1);
    if (f.kind == "quasi") {
      f.generator = arg;
    } else {
      const auto p = parse_list(arg);
      if (p.empty()) throw ParameterError(fmt::format("missing parameter in '{}'", text));
      f.alpha = f.beta = f.u = f.a = p[0];
      if (p.size() > 1) f.v = f.b = p[1];
    }
  }
  return mean_from_flags(f);
}

void add_means(CLI::App& app, Runner& runner, std::uint64_t& seed) {
  auto* means_cmd = app.add_subcommand("means", "mean-value families");
  means_cmd->require_subcommand(1);

  {
    auto* sub = means_cmd->add_subcommand("eval", "evaluate M(x, y)");
    auto f = make<MeanFlags>();
    auto xy = std::make_shared<std::pair<double, double>>();
    add_mean_flags(sub, *f);
    sub->add_option("--x", xy->first)->required();
    sub->add_option("--y", xy->second)->required();
    sub->callback([&runner, f, xy] {
      runner.action = [f, xy] {
        const auto spec = mean_from_flags(*f);
        const auto rep = means::mean_eval(spec, xy->first, xy->second);
        Report r = value_report("value", rep.value);
        r.meta["mean"] = spec.name();
        r.meta["branch"] = rep.branch == means::Branch::Generic ? "generic" : "limit";
        return r;
      };
    });
  }
  {
    auto* sub = means_cmd->add_subcommand("conjugate", "evaluate xy / M(x, y)");
    auto f = make<MeanFlags>();
    auto xy = std::make_shared<std::pair<double, double>>();
    add_mean_flags(sub, *f);
    sub->add_option("--x", xy->first)->required();
    sub->add_option("--y", xy->second)->required();
    sub->callback([&runner, f, xy] {
      runner.action = [f, xy] {
        const auto spec = mean_from_flags(*f);
        Report r = value_report("value", means::mean_conjugate(spec, xy->first, xy->second));
        r.meta["mean"] = spec.name();
        return r;
      };
    });
  }
  {
    struct Opts {
      std::string m = "arith";
      std::string n = "geom";
      double x0 = 0.0;
      double y0 = 0.0;
      double tol = 1e-15;
      int max_iter = 200;
    };
    auto* sub = means_cmd->add_subcommand("iterate", "common limit of x <- m(x, y), y <- n(x, y)");
    auto o = make<Opts>();
    sub->add_option("--m", o->m, "first mean, e.g. arith, power:0.5, rado:-1")->capture_default_str();
    sub->add_option("--n", o->n, "second mean")->capture_default_str();
    sub->add_option("--x0", o->x0)->required();
    sub->add_option("--y0", o->y0)->required();
    sub->add_option("--tol", o->tol)->capture_default_str();
    sub->add_option("--max-iter", o->max_iter)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        const auto m = parse_mean(o->m);
        const auto n = parse_mean(o->n);
        const auto res = means::iterate_mean(m, n, o->x0, o->y0, o->tol, o->max_iter);
        Report r = value_report("limit", res.mu);
        r.meta["iterations"] = res.iterations;
        const bool agm = (o->m == "arith" && o->n == "geom") || (o->m == "geom" && o->n == "arith");
        if (agm && o->x0 > 0.0 && o->y0 > 0.0) {
          const double closed = means::agm_closed_form(std::max(o->x0, o->y0), std::min(o->x0, o->y0));
          r.meta["elliptic_closed_form"] = closed;
          r.meta["relative_difference"] = std::abs(res.mu - closed) / closed;
        }
        return r;
      };
    });
  }
  {
    struct Opts {
      double alpha = 0.0;
      std::uint64_t samples = 100000;
    };
    auto* sub = means_cmd->add_subcommand("rado-check", "certify M_p <= R_alpha <= M_q for the branch of alpha");
    auto o = make<Opts>();
    sub->add_option("--alpha", o->alpha)->required();
    sub->add_option("--samples", o->samples)->capture_default_str();
    sub->callback([&runner, o, &seed] {
      runner.action = [o, &seed] {
        const auto br = means::rado_branch(o->alpha);
        Report r = certificate_report(means::check_rado_bounds(o->alpha, o->samples, seed));
        r.meta["lower_exponent"] = br.lower_exponent;
        r.meta["upper_exponent"] = br.upper_exponent;
        return r;
      };
    });
  }
  {
    struct Opts {
      MeanFlags f;
      double t_min = -5.0;
      double t_max = 5.0;
      int points = 101;
    };
    auto* sub = means_cmd->add_subcommand("profile", "h(t) = M(1, e^t) / (1 + e^t)");
    auto o = make<Opts>();
    add_mean_flags(sub, o->f);
    sub->add_option("--t-min", o->t_min)->capture_default_str();
    sub->add_option("--t-max", o->t_max)->capture_default_str();
    sub->add_option("--points", o->points)->capture_default_str()->check(CLI::Range(2, 1000000));
    sub->callback([&runner, o] {
      runner.action = [o] {
        const auto spec = mean_from_flags(o->f);
        Report r;
        r.meta["mean"] = spec.name();
        r.columns = {"t", "h"};
        for (int i = 0; i < o->points; ++i) {
          const double t = o->t_min + (o->t_max - o->t_min) * i / (o->points - 1);
          r.add_row({t, means::mean_profile_h(spec, t)});
        }
        return r;
      };
    });
  }
}

// ---- bounds ----------------------------------------------------------------

void add_bounds(CLI::App& app, Runner& runner, std::uint64_t& seed) {
  auto* bounds = app.add_subcommand("bounds", "bounds for logarithms and e");
  bounds->require_subcommand(1);

  bounds->add_subcommand("list", "registered families")->callback([&runner] {
    runner.action = [] {
      Report r;
      r.columns = {"id", "domain", "strict", "formula"};
      for (const auto& f : logbounds::bound_registry()) r.add_row({f.id, domain_text(f.domain), f.strict, f.formula});
      return r;
    };
  });
  {
    struct Opts {
      std::string id;
      double x = 0.0;
    };
    auto* sub = bounds->add_subcommand("chain", "evaluate every term of a chain of inequalities");
    auto o = make<Opts>();
    sub->add_option("--id", o->id, "eq12, eq14, eq15, eq17, eq19, eq20, eq29, eq35")->required();
    sub->add_option("--x", o->x)->required();
    sub->callback([&runner, o] {
      runner.action = [o] {
        Report r;
        r.meta["chain"] = o->id;
        r.meta["x"] = o->x;
        r.columns = {"term", "value"};
        for (const auto& [label, value] : logbounds::eval_chain(o->id, o->x)) r.add_row({label, value});
        return r;
      };
    });
  }
  {
    struct Opts {
      std::string family = "e_exponent";
      std::optional<double> x;
      double x_min = 1e-3;
      double x_max = 1e3;
      int points = 61;
    };
    auto* sub = bounds->add_subcommand("eps", "deviation functions; taylor:<n> for the eps_n family");
    auto o = make<Opts>();
    sub->add_option("--family", o->family, "log_sqrt, pade2, e_exponent, sqrt_pair, mid_pair, taylor:<n>")
        ->capture_default_str();
    sub->add_option("--x", o->x, "single point; otherwise a log-spaced sweep");
    sub->add_option("--x-min", o->x_min)->capture_default_str();
    sub->add_option("--x-max", o->x_max)->capture_default_str();
    sub->add_option("--points", o->points)->capture_default_str()->check(CLI::Range(2, 1000000));
    sub->callback([&runner, o] {
      runner.action = [o] {
        std::function<double(double)> eps;
        if (o->family.rfind("taylor:", 0) == 0) {
          const int n = static_cast<int>(parse_list(o->family.substr(7)).at(0));
          eps = [n](double x) { return logbounds::eps_taylor_bound(n, x); };
        } else {
          const std::string fam = o->family;
          eps = [fam](double x) { return logbounds::eps_eval(fam, x); };
        }
        if (o->x) {
          Report r = value_report("eps", eps(*o->x));
          r.meta["family"] = o->family;
          r.meta["x"] = *o->x;
          return r;
        }
        if (!(o->x_min > 0.0 && o->x_max > o->x_min)) throw ParameterError("sweep needs 0 < x-min < x-max");
        Report r;
        r.meta["family"] = o->family;
        r.columns = {"x", "eps"};
        for (int i = 0; i < o->points; ++i) {
          const double x = o->x_min * std::pow(o->x_max / o->x_min, static_cast<double>(i) / (o->points - 1));
          r.add_row({x, eps(x)});
        }
        return r;
      };
    });
  }
  {
    struct Opts {
      int n = 3;
      std::optional<double> x;
    };
    auto* sub = bounds->add_subcommand("cf", "convergents R_1..R_n of the continued fraction of ln(1+x)");
    auto o = make<Opts>();
    sub->add_option("--n", o->n)->capture_default_str()->check(CLI::Range(1, 200));
    sub->add_option("--x", o->x, "also evaluate each convergent at x");
    sub->callback([&runner, o] {
      runner.action = [o] {
        Report r;
        r.columns = {"n", "exact", "numerator", "denominator"};
        if (o->x) {
          r.meta["x"] = *o->x;
          r.meta["ln1p"] = std::log1p(*o->x);
          r.columns.push_back("value");
        }
        for (int k = 1; k <= o->n; ++k) {
          const auto c = logbounds::cf_convergent(k);
          std::vector<Json> row{k, c.exact, c.exact ? poly_text(c.p_coeffs) : "", c.exact ? poly_text(c.q_coeffs) : ""};
          if (o->x) row.emplace_back(logbounds::cf_eval(k, *o->x));
          r.add_row(std::move(row));
        }
        return r;
      };
    });
  }
  {
    struct Opts {
      std::string family;
      std::uint64_t samples = 10000;
      std::string strategy = "log-uniform";
      std::optional<double> lo;
      std::optional<double> hi;
    };
    auto* sub = bounds->add_subcommand("certify", "sample a family and report counterexamples");
    auto o = make<Opts>();
    sub->add_option("--family", o->family)->required();
    sub->add_option("--samples", o->samples)->capture_default_str();
    sub->add_option("--strategy", o->strategy, "uniform, log-uniform, grid")->capture_default_str();
    sub->add_option("--lo", o->lo, "lower end of the sampling window");
    sub->add_option("--hi", o->hi, "upper end of the sampling window");
    sub->callback([&runner, o, &seed] {
      runner.action = [o, &seed] {
        std::optional<cert::Window> w;
        if (o->lo || o->hi) w = cert::Window{o->lo.value_or(-INFINITY), o->hi.value_or(INFINITY)};
        return certificate_report(
            cert::certify(logbounds::find_family(o->family), o->samples, seed, cert::parse_strategy(o->strategy), w));
      };
    });
  }
  {
    struct Opts {
      std::string family;
      std::vector<double> deltas;
      std::uint64_t samples = 10000;
      std::string strategy = "log-uniform";
    };
    auto* sub = bounds->add_subcommand("sharpness", "certify a family with a perturbed constant");
    auto o = make<Opts>();
    sub->add_option("--family", o->family, "eq09, eq10, eq13, eq13-numerator, eq37")->required();
    sub->add_option("--deltas", o->deltas, "comma-separated constants")->delimiter(',');
    sub->add_option("--samples", o->samples)->capture_default_str();
    sub->add_option("--strategy", o->strategy)->capture_default_str();
    sub->callback([&runner, o, &seed] {
      runner.action = [o, &seed] {
        const auto& knob = cert::find_knob(o->family);
        auto deltas = o->deltas;
        if (deltas.empty()) deltas = {knob.sharp_value * 0.99, knob.sharp_value, knob.sharp_value * 1.01};
        Report r;
        r.meta["family"] = knob.id;
        r.meta["formula"] = knob.formula;
        r.meta["sharp_value"] = knob.sharp_value;
        r.columns = {"delta", "holds", "worst_gap", "violations", "worst_x"};
        for (const auto& row :
             cert::sharpness_probe(knob.knob, deltas, o->samples, seed, cert::parse_strategy(o->strategy))) {
          r.add_row({row.delta, row.holds, row.worst_gap, row.violations, row.worst_x});
        }
        return r;
      };
    });
  }
}

// ---- sums ------------------------------------------------------------------

void add_sums(CLI::App& app, Runner& runner) {
  auto* sums_cmd = app.add_subcommand("sums", "partial sums, Euler constants, two-sided bounds");
  sums_cmd->require_subcommand(1);
  const std::string model_help = "harmonic, p-series, extra, klogk, q:<tau>, power:<a>";

  {
    struct Opts {
      std::string model = "harmonic";
      long n = 0;
    };
    auto* sub = sums_cmd->add_subcommand("partial", "S(n)");
    auto o = make<Opts>();
    sub->add_option("--model", o->model, model_help)->capture_default_str();
    sub->add_option("--n", o->n)->required();
    sub->callback([&runner, o] {
      runner.action = [o] {
        const auto m = sums::model_by_name(o->model);
        Report r = value_report("sum", sums::partial_sum(m, o->n));
        r.meta["model"] = m.id;
        r.meta["n"] = o->n;
        return r;
      };
    });
  }
  {
    struct Opts {
      std::string model = "harmonic";
      long n = 1000000;
    };
    auto* sub = sums_cmd->add_subcommand("euler-constant", "enclosure [S(n) - F(n+1), S(n) - F(n)]");
    auto o = make<Opts>();
    sub->add_option("--model", o->model, model_help)->capture_default_str();
    sub->add_option("--n", o->n)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        const auto m = sums::model_by_name(o->model);
        const auto e = sums::euler_constant(m, o->n);
        Report r;
        r.meta["model"] = m.id;
        r.meta["n"] = e.n_used;
        r.meta["lower"] = e.lower;
        r.meta["upper"] = e.upper;
        r.meta["width"] = e.width();
        r.meta["midpoint"] = e.midpoint();
        return r;
      };
    });
  }
  {
    struct Opts {
      std::string fixture;
      std::string model = "harmonic";
      std::optional<double> c_lo;
      std::optional<double> c_hi;
      long n_min = 0;
      long n_max = 10000;
      bool table = false;
    };
    auto* sub = sums_cmd->add_subcommand("sl", "two-sided bounds for partial sums over a range of n");
    auto o = make<Opts>();
    sub->add_option("--fixture", o->fixture,
                    "eq22 eq23 eq24 eq25 eq26 eq27 eq31 zd28 zd35 zd36 extra-sl1 extra-sl2; "
                    "omit to use --model with --c-lo/--c-hi");
    sub->add_option("--model", o->model, model_help)->capture_default_str();
    sub->add_option("--c-lo", o->c_lo, "F(n) + c_lo < S(n)");
    sub->add_option("--c-hi", o->c_hi, "S(n) < F(n) + c_hi");
    sub->add_option("--n-min", o->n_min, "default: the fixture's first n");
    sub->add_option("--n-max", o->n_max)->capture_default_str();
    sub->add_flag("--table", o->table, "emit one row per n");
    sub->callback([&runner, o] {
      runner.action = [o] {
        std::optional<sums::SlFixture> fx;
        sums::SeriesModel model;
        if (!o->fixture.empty()) {
          fx = sums::find_fixture(o->fixture);
          model = sums::model_by_name(fx->model);
        } else {
          if (!o->c_lo || !o->c_hi) throw ParameterError("give --fixture, or --c-lo and --c-hi");
          model = sums::model_by_name(o->model);
        }
        const long n_min = o->n_min > 0 ? o->n_min : (fx ? fx->n_min : model.start);
        if (n_min < model.start || o->n_max < n_min) throw ParameterError("bad n range");
        const auto partial = sums::partial_sums(model, o->n_max);
        Report r;
        r.meta["check"] = fx ? fx->id : model.id;
        r.meta["formula"] = fx ? fx->formula : fmt::format("F(n) + {} < S(n) < F(n) + {}", *o->c_lo, *o->c_hi);
        r.meta["n_min"] = n_min;
        r.meta["n_max"] = o->n_max;
        long violations = 0;
        Json lower_eq = Json::array();
        Json upper_eq = Json::array();
        if (o->table) r.columns = {"n", "lower", "sum", "upper", "holds"};
        for (long n = n_min; n <= o->n_max; ++n) {
          const double s = partial[static_cast<std::size_t>(n - model.start)];
          sums::SlResult res;
          if (fx) {
            res = sums::eval_fixture(*fx, n, s);
          } else {
            const double f = model.antiderivative(static_cast<double>(n));
            res.sum = s;
            res.lower = f + *o->c_lo;
            res.upper = f + *o->c_hi;
            res.holds = res.lower < s && s < res.upper;
            res.lower_equality = s == res.lower;
            res.upper_equality = s == res.upper;
          }
          if (!res.holds) ++violations;
          if (res.lower_equality) lower_eq.push_back(n);
          if (res.upper_equality) upper_eq.push_back(n);
          if (o->table) r.add_row({n, res.lower, res.sum, res.upper, res.holds});
        }
        r.meta["holds"] = violations == 0;
        r.meta["violations"] = violations;
        r.meta["lower_equality_at"] = lower_eq;
        r.meta["upper_equality_at"] = upper_eq;
        r.exit_code = violations == 0 ? kExitOk : kExitCounterexample;
        return r;
      };
    });
  }
  {
    struct Opts {
      int upto = 6;
    };
    auto* sub = sums_cmd->add_subcommand("ak", "coefficients A_k of the harmonic expansion");
    auto o = make<Opts>();
    sub->add_option("--upto", o->upto)->capture_default_str()->check(CLI::Range(1, 40));
    sub->callback([&runner, o] {
      runner.action = [o] {
        Report r;
        r.columns = {"k", "A_k"};
        for (int k = 1; k <= o->upto; ++k) r.add_row({k, sums::expansion_coefficient_A(k)});
        return r;
      };
    });
  }
  {
    struct Opts {
      int order = 1;
      std::vector<long> grid{1000, 10000, 100000};
      std::optional<double> c;
    };
    auto* sub = sums_cmd->add_subcommand("limits", "extrapolated n(S_n - C - ln n) or n^2(S_n - C - ln n - 1/(2n))");
    auto o = make<Opts>();
    sub->add_option("--order", o->order)->capture_default_str()->check(CLI::IsMember({1, 2}));
    sub->add_option("--grid", o->grid, "comma-separated increasing n")->delimiter(',')->capture_default_str();
    sub->add_option("--c", o->c, "Euler's constant override");
    sub->callback([&runner, o] {
      runner.action = [o] {
        const double c = o->c ? *o->c : sums::euler_constant(sums::harmonic_model(), 1000000).midpoint();
        Report r = value_report("limit", sums::asymptotic_limit(o->order, o->grid, c));
        r.meta["order"] = o->order;
        r.meta["constant"] = c;
        Json seq = Json::array();
        for (double q : sums::asymptotic_sequence(o->order, o->grid, c)) seq.push_back(q);
        r.meta["sequence"] = seq;
        return r;
      };
    });
  }
  {
    struct Opts {
      double a = 0.5;
      long n = 1000000;
    };
    auto* sub = sums_cmd->add_subcommand("zeta-cont", "sum k^-a - n^(1-a)/(1-a) - n^-a/2 for 0 < a < 1");
    auto o = make<Opts>();
    sub->add_option("--a", o->a)->capture_default_str();
    sub->add_option("--n", o->n)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        Report r = value_report("value", sums::zeta_continuation(o->a, o->n));
        r.meta["a"] = o->a;
        r.meta["n"] = o->n;
        return r;
      };
    });
  }
}

// ---- zeta ------------------------------------------------------------------

void add_zeta(CLI::App& app, Runner& runner) {
  auto* zeta_cmd = app.add_subcommand("zeta", "Bernoulli numbers and zeta / eta values");
  zeta_cmd->require_subcommand(1);
  {
    auto* sub = zeta_cmd->add_subcommand("bernoulli", "exact B_0..B_n");
    auto upto = std::make_shared<int>(20);
    sub->add_option("--upto", *upto)->capture_default_str();
    sub->callback([&runner, upto] {
      runner.action = [upto] {
        const auto t = zeta::bernoulli(*upto);
        Report r;
        r.columns = {"k", "B_k", "value"};
        for (int k = 0; k <= *upto; ++k) {
          r.add_row({k, t.as_string(static_cast<std::size_t>(k)), t.as_double(static_cast<std::size_t>(k))});
        }
        return r;
      };
    });
  }
  {
    auto* sub = zeta_cmd->add_subcommand("even", "zeta(2n) and eta(2n) from Bernoulli numbers");
    auto n = std::make_shared<int>(1);
    sub->add_option("--n", *n)->capture_default_str();
    sub->callback([&runner, n] {
      runner.action = [n] {
        Report r;
        r.meta["n"] = *n;
        r.meta["zeta"] = zeta::zeta_even(*n);
        r.meta["eta"] = zeta::eta_even(*n);
        r.meta["odd_terms"] = zeta::zeta_even(*n) * -std::expm1(-2.0 * *n * std::numbers::ln2);
        return r;
      };
    });
  }
  {
    struct Opts {
      double a = 1.0;
      long terms = 1000000;
    };
    auto* sub = zeta_cmd->add_subcommand("eta", "alternating series sum (-1)^(k+1) / k^a");
    auto o = make<Opts>();
    sub->add_option("--a", o->a)->capture_default_str();
    sub->add_option("--terms", o->terms)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        Report r = value_report("direct", zeta::eta_direct(o->a, o->terms));
        r.meta["a"] = o->a;
        r.meta["from_zeta"] = o->a == 1.0 ? Json(nullptr) : Json(zeta::eta_from_zeta(o->a));
        return r;
      };
    });
  }
  {
    struct Opts {
      double s = 2.0;
      long terms = 10000;
    };
    auto* sub = zeta_cmd->add_subcommand("direct", "partial sum with tail correction");
    auto o = make<Opts>();
    sub->add_option("--s", o->s)->capture_default_str();
    sub->add_option("--terms", o->terms)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        const auto z = zeta::zeta_direct(o->s, o->terms);
        Report r = value_report("value", z.value);
        r.meta["error"] = z.error;
        r.meta["s"] = o->s;
        r.meta["terms"] = o->terms;
        return r;
      };
    });
  }
}

// ---- solve -----------------------------------------------------------------

struct Problem {
  solve::ScalarFn f;
  solve::ScalarFn df;
  solve::ScalarFn g;
};

/// Named test problems: sqrt2 (x^2 - 2), cube (x^3), half (g = x/2),
/// eps-e (eps_e(x) - c, g = 1/ln(1+1/x) - c), eps-e-inverse
/// (g = 1/(exp(1/(x+c)) - 1)).
Problem problem_by_name(const std::string& name, double c) {
  auto numeric_df = [](solve::ScalarFn f) {
    return [f](double x) {
      const double h = 1e-6 * std::max(1.0, std::abs(x));
      return (f(x + h) - f(x - h)) / (2.0 * h);
    };
  };
  if (name == "sqrt2") {
    auto f = [](double x) { return x * x - 2.0; };
    return {f, [](double x) { return 2.0 * x; }, [](double x) { return 0.5 * (x + 2.0 / x); }};
  }
  if (name == "cube") {
    return {[](double x) { return x * x * x; }, [](double x) { return 3.0 * x * x; }, [](double x) { return x; }};
  }
  if (name == "half") {
    return {[](double x) { return -x / 2.0; }, [](double) { return -0.5; }, [](double x) { return x / 2.0; }};
  }
  if (name == "eps-e") {
    auto f = [c](double x) { return logbounds::eps_eval("e_exponent", x) - c; };
    return {f, numeric_df(f), [c](double x) { return 1.0 / std::log1p(1.0 / x) - c; }};
  }
  if (name == "eps-e-inverse") {
    auto g = [c](double x) { return 1.0 / std::expm1(1.0 / (x + c)); };
    auto f = [g](double x) { return g(x) - x; };
    return {f, numeric_df(f), g};
  }
  throw ParameterError(fmt::format("unknown problem '{}' (sqrt2, cube, half, eps-e, eps-e-inverse)", name));
}

const char* status_text(solve::SolveStatus s) {
  switch (s) {
    case solve::SolveStatus::Converged: return "converged";
    case solve::SolveStatus::NoConvergence: return "no-convergence";
    case solve::SolveStatus::Divergence: return "divergence";
  }
  return "?";
}

Report trace_report(const solve::SolveTrace& t) {
  Report r;
  r.meta["status"] = status_text(t.status);
  r.meta["root"] = t.root();
  r.meta["iterations"] = t.iterations;
  r.meta["residual"] = t.residual;
  r.columns = {"k", "x"};
  for (std::size_t k = 0; k < t.iterates.size(); ++k) r.add_row({k, t.iterates[k]});
  return r;
}

void add_solve(CLI::App& app, Runner& runner) {
  auto* solve_cmd = app.add_subcommand("solve", "root finding and fixed-point iteration");
  solve_cmd->require_subcommand(1);
  const std::string help = "sqrt2, cube, half, eps-e, eps-e-inverse";
  struct Opts {
    std::string problem = "sqrt2";
    double c = 0.4;
    double lo = 1.0;
    double hi = 2.0;
    double x0 = 1.0;
    double x = 1.0;
    double lambda = 1.0;
    double tol = 1e-12;
    int max_iter = 200;
  };
  auto common = [&](CLI::App* sub, Opts& o) {
    sub->add_option("--problem", o.problem, help)->capture_default_str();
    sub->add_option("--c", o.c, "shift for the eps-e problems")->capture_default_str();
  };
  {
    auto* sub = solve_cmd->add_subcommand("bisect", "bisection on [lo, hi]");
    auto o = make<Opts>();
    common(sub, *o);
    sub->add_option("--lo", o->lo)->capture_default_str();
    sub->add_option("--hi", o->hi)->capture_default_str();
    sub->add_option("--tol", o->tol)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        return trace_report(solve::bisect(problem_by_name(o->problem, o->c).f, o->lo, o->hi, o->tol));
      };
    });
  }
  {
    auto* sub = solve_cmd->add_subcommand("newton", "Newton's method from x0");
    auto o = make<Opts>();
    common(sub, *o);
    sub->add_option("--x0", o->x0)->capture_default_str();
    sub->add_option("--tol", o->tol)->capture_default_str();
    sub->add_option("--max-iter", o->max_iter)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        const auto p = problem_by_name(o->problem, o->c);
        auto t = solve::newton(p.f, p.df, o->x0, o->tol, o->max_iter);
        Report r = trace_report(t);
        r.meta["linear_tail"] = t.linear_tail;
        return r;
      };
    });
  }
  {
    auto* sub = solve_cmd->add_subcommand("fixed-point", "x <- x + lambda (g(x) - x)");
    auto o = make<Opts>();
    o->tol = 1e-6;
    o->max_iter = 50;
    common(sub, *o);
    sub->add_option("--x0", o->x0)->capture_default_str();
    sub->add_option("--lambda", o->lambda)->capture_default_str();
    sub->add_option("--tol", o->tol)->capture_default_str();
    sub->add_option("--max-iter", o->max_iter)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        return trace_report(
            solve::fixed_point(problem_by_name(o->problem, o->c).g, o->x0, o->lambda, o->tol, o->max_iter));
      };
    });
  }
  {
    auto* sub = solve_cmd->add_subcommand("lambda", "1 / (1 - g'(x))");
    auto o = make<Opts>();
    common(sub, *o);
    sub->add_option("--x", o->x)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        Report r = value_report("lambda", solve::optimal_lambda(problem_by_name(o->problem, o->c).g, o->x));
        r.meta["x"] = o->x;
        return r;
      };
    });
  }
}

// ---- young / classic -------------------------------------------------------

void add_young(CLI::App& app, Runner& runner) {
  auto* young = app.add_subcommand("young", "compare the two Young bounds for xy");
  young->require_subcommand(1);
  struct Opts {
    double x = 0.0;
    double y = 0.0;
    double p = 2.0;
  };
  {
    auto* sub = young->add_subcommand("compare", "x^p/p + y^q/q against x^q/q + y^p/p");
    auto o = make<Opts>();
    sub->add_option("--x", o->x)->required();
    sub->add_option("--y", o->y)->required();
    sub->add_option("--p", o->p)->required();
    sub->callback([&runner, o] {
      runner.action = [o] {
        const auto v = classic::young_compare(o->x, o->y, o->p);
        Report r;
        r.meta["x"] = v.x;
        r.meta["y"] = v.y;
        r.meta["p"] = v.p;
        r.meta["q"] = v.q;
        r.meta["product"] = v.product;
        r.meta["rhs_pq"] = v.rhs_pq;
        r.meta["rhs_qp"] = v.rhs_qp;
        r.meta["better"] = classic::to_string(v.better);
        r.meta["case"] = classic::to_string(v.young_case);
        r.meta["y_cr"] = v.y_cr ? Json(*v.y_cr) : Json(nullptr);
        return r;
      };
    });
  }
  {
    auto* sub = young->add_subcommand("critical", "t > 1 where both bounds agree for given x < 1");
    auto o = make<Opts>();
    sub->add_option("--x", o->x)->required();
    sub->add_option("--p", o->p)->required();
    sub->callback([&runner, o] {
      runner.action = [o] {
        const double t = classic::young_critical(o->x, o->p);
        Report r = value_report("y_cr", t);
        r.meta["residual"] = classic::young_h(t, o->p) - classic::young_h(o->x, o->p);
        return r;
      };
    });
  }
}

void add_classic(CLI::App& app, Runner& runner) {
  auto* classic_cmd = app.add_subcommand("classic", "Cauchy-Bunyakovsky, Minkowski, Holder");
  classic_cmd->require_subcommand(1);
  struct Opts {
    std::vector<double> u;
    std::vector<double> v;
    double p = 2.0;
  };
  auto report = [](const classic::VectorCheck& c) {
    Report r;
    r.meta["lhs"] = c.lhs;
    r.meta["rhs"] = c.rhs;
    r.meta["holds"] = c.holds;
    r.meta["equality"] = c.equality;
    r.exit_code = c.holds ? kExitOk : kExitCounterexample;
    return r;
  };
  for (const char* name : {"cb", "minkowski", "holder"}) {
    auto* sub = classic_cmd->add_subcommand(name, std::string(name) + " inequality for two vectors");
    auto o = make<Opts>();
    sub->add_option("--u", o->u, "comma-separated")->delimiter(',')->required();
    sub->add_option("--v", o->v, "comma-separated")->delimiter(',')->required();
    const std::string which = name;
    if (which == "holder") sub->add_option("--p", o->p)->required();
    sub->callback([&runner, o, which, report] {
      runner.action = [o, which, report] {
        if (which == "cb") return report(classic::cauchy_bunyakovsky(o->u, o->v));
        if (which == "minkowski") return report(classic::minkowski(o->u, o->v));
        return report(classic::holder(o->u, o->v, o->p));
      };
    });
  }
}

// ---- complex ---------------------------------------------------------------

void add_grid_flags(CLI::App* sub, region::Grid& g) {
  sub->add_option("--re-min", g.re_lo)->capture_default_str();
  sub->add_option("--re-max", g.re_hi)->capture_default_str();
  sub->add_option("--im-min", g.im_lo)->capture_default_str();
  sub->add_option("--im-max", g.im_hi)->capture_default_str();
  sub->add_option("--nx", g.nx)->capture_default_str();
  sub->add_option("--ny", g.ny)->capture_default_str();
}

void add_complex(CLI::App& app, Runner& runner) {
  auto* cx = app.add_subcommand("complex", "complexified inequalities");
  cx->require_subcommand(1);
  {
    struct Opts {
      double re = 0.0;
      double im = 0.0;
      std::string which = "amgm";
    };
    auto* sub = cx->add_subcommand("classify", "classify a point against a region inequality");
    auto o = make<Opts>();
    sub->add_option("--re", o->re)->required();
    sub->add_option("--im", o->im)->capture_default_str();
    sub->add_option("--which", o->which, "amgm, modulus, log, eps")->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        const region::Complex s{o->re, o->im};
        Report r;
        r.meta["re"] = o->re;
        r.meta["im"] = o->im;
        if (o->which == "eps") {
          const auto e = region::eps_complex(s);
          r.meta["eps_re"] = e.value.real();
          r.meta["eps_im"] = e.value.imag();
          r.meta["modulus"] = e.modulus;
          return r;
        }
        region::RegionVerdict v;
        if (o->which == "amgm") {
          v = region::amgm_classify(s);
          r.meta["quartic"] = region::quartic_residual(s);
        } else if (o->which == "modulus") {
          v = region::amgm_modulus_classify(s);
        } else if (o->which == "log") {
          v = region::log_classify(s);
        } else {
          throw ParameterError(fmt::format("unknown region '{}'", o->which));
        }
        r.meta["status"] = region::to_string(v.status);
        r.meta["holds"] = v.holds();
        r.meta["residual"] = v.residual;
        return r;
      };
    });
  }
  {
    auto* sub = cx->add_subcommand("curve", "points of the boundary r = 2 - cos(phi) +- sqrt((2 - cos(phi))^2 - 1)");
    auto points = std::make_shared<int>(1000);
    sub->add_option("--points", *points, "angles per branch")->capture_default_str()->check(CLI::Range(1, 10000000));
    sub->callback([&runner, points] {
      runner.action = [points] {
        Report r;
        r.columns = {"phi", "branch", "re", "im", "residual", "status"};
        long off_curve = 0;
        for (int k = 0; k < *points; ++k) {
          const double phi = 2.0 * std::numbers::pi * k / *points;
          const auto roots = region::polar_curve(phi);
          for (const auto& [branch, rad] : {std::pair{"minus", roots.r_minus}, std::pair{"plus", roots.r_plus}}) {
            const auto s = std::polar(rad, phi);
            const double q = region::scaled_quartic_residual(s);
            const auto v = region::amgm_classify(s);
            if (v.status != region::RegionStatus::Boundary || std::abs(q) > 1e-9) ++off_curve;
            r.add_row({phi, branch, s.real(), s.imag(), q, region::to_string(v.status)});
          }
        }
        r.meta["points"] = 2L * *points;
        r.meta["off_curve"] = off_curve;
        return r;
      };
    });
  }
  cx->add_subcommand("axes", "where |s| <= |(s+1)/2|^2 holds on the real and imaginary axes")->callback([&runner] {
    runner.action = [] {
      const auto ax = region::axis_intervals();
      Report r;
      r.columns = {"axis", "lo", "hi"};
      for (const auto& i : ax.real_axis) r.add_row({"real", i.lo, i.hi});
      for (const auto& i : ax.imag_axis) r.add_row({"imag", i.lo, i.hi});
      return r;
    };
  });
  {
    struct Opts {
      region::Grid grid;
      int rays = 16;
    };
    auto* sub = cx->add_subcommand("log-scan", "verdicts of |ln(1+z)| <= |z| on a grid, with ray crossings");
    auto o = make<Opts>();
    add_grid_flags(sub, o->grid);
    sub->add_option("--rays", o->rays)->capture_default_str();
    sub->callback([&runner, o] {
      runner.action = [o] {
        const auto scan = region::log_region_scan(o->grid, o->rays);
        Report r;
        r.meta["points"] = scan.points.size();
        r.meta["failures"] = scan.failures;
        Json rays = Json::array();
        for (const auto& ray : scan.rays) rays.push_back({{"theta", ray.theta}, {"radii", ray.radii}});
        r.meta["rays"] = rays;
        r.columns = {"re", "im", "residual", "status"};
        for (const auto& p : scan.points) {
          r.add_row({p.z.real(), p.z.imag(), p.verdict.residual, region::to_string(p.verdict.status)});
        }
        return r;
      };
    });
  }
  {
    auto* sub = cx->add_subcommand("eps-sup", "largest |1/ln(1+1/z) - z| over grid nodes off the cut [-1, 0]");
    auto g = std::make_shared<region::Grid>();
    add_grid_flags(sub, *g);
    sub->callback([&runner, g] {
      runner.action = [g] {
        const auto s = region::eps_complex_sup(*g);
        Report r;
        r.meta["sup"] = s.sup;
        r.meta["arg_re"] = s.argsup.real();
        r.meta["arg_im"] = s.argsup.imag();
        r.meta["evaluated"] = s.evaluated;
        return r;
      };
    });
  }
}

// ---- certify alias ---------------------------------------------------------

void add_certify(CLI::App& app, Runner& runner, std::uint64_t& seed) {
  struct Opts {
    std::string family;
    std::uint64_t samples = 10000;
    std::string strategy = "log-uniform";
    int nx = 400;
    int ny = 400;
  };
  auto* sub = app.add_subcommand("certify", "certify a bound family (eq16-complex scans the complex grid)");
  auto o = make<Opts>();
  sub->add_option("--family", o->family)->required();
  sub->add_option("--samples", o->samples)->capture_default_str();
  sub->add_option("--strategy", o->strategy, "uniform, log-uniform, grid")->capture_default_str();
  sub->add_option("--nx", o->nx, "eq16-complex grid columns")->capture_default_str();
  sub->add_option("--ny", o->ny, "eq16-complex grid rows")->capture_default_str();
  sub->callback([&runner, o, &seed] {
    runner.action = [o, &seed] {
      if (o->family == "eq16-complex") {
        return certificate_report(cert::certify_log_region({-3.0, 3.0, -3.0, 3.0, o->nx, o->ny}));
      }
      return certificate_report(
          cert::certify(logbounds::find_family(o->family), o->samples, seed, cert::parse_strategy(o->strategy)));
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for mean, logarithm, series and Young-type inequalities", "ineqlab"};
  app.fallthrough();
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::string output = "text";
  std::string out_path;
  app.add_option("--seed", seed, "sampling seed")->capture_default_str();
  app.add_option("--output", output, "text, json or csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "write to this file instead of stdout");

  Runner runner;
  add_means(app, runner, seed);
  add_bounds(app, runner, seed);
  add_sums(app, runner);
  add_zeta(app, runner);
  add_solve(app, runner);
  add_young(app, runner);
  add_classic(app, runner);
  add_complex(app, runner);
  add_certify(app, runner, seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!runner.action) {
    err << app.help();
    return kExitUsage;
  }
  const auto format = output == "json" ? OutputFormat::Json : output == "csv" ? OutputFormat::Csv : OutputFormat::Text;
  try {
    const Report report = runner.action();
    if (!out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << out_path << '\n';
        return kExitUsage;
      }
      render(report, format, file);
    } else {
      render(report, format, out);
    }
    return report.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ineqlab::cli
