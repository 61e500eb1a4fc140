#include "ineqlab/cert.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "ineqlab/support/counter_rng.hpp"
#include "ineqlab/support/parallel.hpp"

namespace ineqlab::cert {
namespace {

constexpr double kWindow = 1e6;
constexpr double kWindowFloor = 1e-6;

double lnr(double x) { return std::log1p(1.0 / x); }

logbounds::Domain open_half_line() { return {0.0, INFINITY, false, false}; }
logbounds::Domain closed_half_line() { return {0.0, INFINITY, true, false}; }

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Uniform: return "uniform";
    case Strategy::LogUniform: return "log-uniform";
    case Strategy::Grid: return "grid";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "uniform") return Strategy::Uniform;
  if (name == "log-uniform" || name == "loguniform") return Strategy::LogUniform;
  if (name == "grid") return Strategy::Grid;
  throw ParameterError(fmt::format("unknown strategy '{}' (uniform, log-uniform, grid)", name));
}

Window sampling_window(const logbounds::BoundFamily& family, Strategy strategy, std::optional<Window> requested) {
  const auto& d = family.domain;
  if (d.empty()) throw DomainError(fmt::format("{}: empty domain", family.id));
  Window w;
  if (requested) {
    w = *requested;
  } else {
    const bool positive = strategy == Strategy::LogUniform || d.lo >= 0.0;
    w = {positive ? kWindowFloor : -kWindow, kWindow};
  }
  w.lo = std::max(w.lo, d.lo);
  w.hi = std::min(w.hi, d.hi);
  if (!(w.lo < w.hi)) throw DomainError(fmt::format("{}: sampling window is empty", family.id));
  if (strategy == Strategy::LogUniform && !(w.lo > 0.0)) {
    w.lo = std::max(kWindowFloor, w.hi * 1e-12);
    if (!(w.lo < w.hi)) throw DomainError(fmt::format("{}: no positive part to sample log-uniformly", family.id));
  }
  return w;
}

Certificate certify(const logbounds::BoundFamily& family, std::uint64_t samples, std::uint64_t seed,
                    Strategy strategy, std::optional<Window> window) {
  if (samples < 1) throw ParameterError("certify needs at least one sample");
  const Window w = sampling_window(family, strategy, window);
  const numeric::CounterRng rng(seed);
  const bool log_grid = w.lo > 0.0;
  auto point = [&](std::uint64_t i) {
    switch (strategy) {
      case Strategy::Uniform: return rng.uniform(i, w.lo, w.hi);
      case Strategy::LogUniform: return rng.log_uniform(i, w.lo, w.hi);
      case Strategy::Grid: {
        const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(samples);
        return log_grid ? w.lo * std::pow(w.hi / w.lo, t) : w.lo + (w.hi - w.lo) * t;
      }
    }
    return w.lo;
  };
  struct Eval {
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool inside = false;
  };
  const auto evals = numeric::parallel_map<Eval>(static_cast<std::size_t>(samples), [&](std::size_t i) {
    Eval e;
    e.x = point(i);
    e.inside = family.domain.contains(e.x);
    if (e.inside) {
      e.lhs = family.lhs(e.x);
      e.rhs = family.rhs(e.x);
    }
    return e;
  });
  CertificateBuilder builder(family.id, seed, to_string(strategy));
  for (std::size_t i = 0; i < evals.size(); ++i) {
    const auto& e = evals[i];
    if (!e.inside) continue;
    builder.record({i, Point::scalar(e.x), e.lhs, e.rhs, e.rhs - e.lhs, scaled_tolerance(e.lhs, e.rhs), family.strict});
  }
  return builder.finish();
}

logbounds::BoundFamily reversed(const logbounds::BoundFamily& family) {
  auto r = family;
  r.id = family.id + "-reversed";
  std::swap(r.lhs, r.rhs);
  r.formula = "reversed: " + family.formula;
  return r;
}

Certificate certify_log_region(const region::Grid& grid) {
  const auto scan = region::log_region_scan(grid, 0);
  CertificateBuilder builder("eq16-complex", 0, "grid");
  std::uint64_t index = 0;
  for (const auto& p : scan.points) {
    const double lhs = std::abs(region::log1p(p.z));
    const double rhs = std::abs(p.z);
    builder.record({index++, Point::pair(p.z.real(), p.z.imag()), lhs, rhs, p.verdict.residual, p.verdict.tolerance,
                    false});
  }
  return builder.finish();
}

const std::vector<KnobInfo>& knob_registry() {
  static const std::vector<KnobInfo> knobs = [] {
    auto ln1p = [](double x) { return std::log1p(x); };
    std::vector<KnobInfo> k;
    k.push_back({"eq09", "ln(1+y) <= y/sqrt(y+d)", 1.0, [ln1p](double d) {
                   return logbounds::BoundFamily{fmt::format("eq09[d={}]", d), ln1p,
                                                 [d](double y) { return y / std::sqrt(y + d); }, closed_half_line(),
                                                 false, "ln(1+y) <= y/sqrt(y+d)"};
                 }});
    k.push_back({"eq10", "2x/(x+d) < ln(1+x)", 2.0, [ln1p](double d) {
                   return logbounds::BoundFamily{fmt::format("eq10[d={}]", d),
                                                 [d](double x) { return 2.0 * x / (x + d); }, ln1p, open_half_line(),
                                                 true, "2x/(x+d) < ln(1+x)"};
                 }});
    k.push_back({"eq13", "ln(1+x) <= x(x+2)/(2(x+d))", 1.0, [ln1p](double d) {
                   return logbounds::BoundFamily{fmt::format("eq13[d={}]", d), ln1p,
                                                 [d](double x) { return x * (x + 2.0) / (2.0 * (x + d)); },
                                                 closed_half_line(), false, "ln(1+x) <= x(x+2)/(2(x+d))"};
                 }});
    k.push_back({"eq13-numerator", "ln(1+x) <= x(x+d)/(2(x+1))", 2.0, [ln1p](double d) {
                   return logbounds::BoundFamily{fmt::format("eq13-numerator[d={}]", d), ln1p,
                                                 [d](double x) { return x * (x + d) / (2.0 * (x + 1.0)); },
                                                 closed_half_line(), false, "ln(1+x) <= x(x+d)/(2(x+1))"};
                 }});
    k.push_back({"eq37", "e < (1+1/x)^(x+d)", 0.5, [](double d) {
                   return logbounds::BoundFamily{fmt::format("eq37[d={}]", d), [](double) { return std::numbers::e; },
                                                 [d](double x) { return std::exp((x + d) * lnr(x)); }, open_half_line(),
                                                 true, "e < (1+1/x)^(x+d)"};
                 }});
    return k;
  }();
  return knobs;
}

const KnobInfo& find_knob(const std::string& id) {
  for (const auto& k : knob_registry()) {
    if (k.id == id) return k;
  }
  throw ParameterError(fmt::format("no sharpness knob for '{}'", id));
}

std::vector<SharpnessRow> sharpness_probe(const Knob& knob, const std::vector<double>& delta_grid,
                                          std::uint64_t samples, std::uint64_t seed, Strategy strategy) {
  if (delta_grid.empty()) throw ParameterError("sharpness_probe needs a non-empty delta grid");
  std::vector<SharpnessRow> rows;
  for (double d : delta_grid) {
    const auto c = certify(knob(d), samples, seed, strategy);
    rows.push_back({d, c.holds, c.worst_gap, c.violations, c.worst_point.x});
  }
  return rows;
}

}  // namespace ineqlab::cert
