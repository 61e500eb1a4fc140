#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ineqlab/bound_family.hpp"
#include "ineqlab/certificate.hpp"
#include "ineqlab/complexregion.hpp"
#include "ineqlab/errors.hpp"

/// Sampling-based certification of lhs <= rhs over a family's domain.
namespace ineqlab::cert {

enum class Strategy { Uniform, LogUniform, Grid };

const char* to_string(Strategy s);
/// "uniform", "log-uniform" or "grid"; throws ParameterError otherwise.
Strategy parse_strategy(const std::string& name);

/// Sampling window. Defaults to [1e-6, 1e6] intersected with the domain
/// (the lower end is -1e6 for Uniform and Grid on domains reaching below 0).
struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

/// The window certify() samples for a family and strategy. Throws
/// DomainError when the domain or its intersection with the window is empty.
Window sampling_window(const logbounds::BoundFamily& family, Strategy strategy,
                       std::optional<Window> requested = std::nullopt);

/// Deterministic in (family, samples, seed, strategy, window). Sample i of
/// Uniform and LogUniform depends only on (seed, i), so a longer run extends
/// a shorter one. Grid places samples at cell midpoints, log-spaced when the
/// window is positive.
Certificate certify(const logbounds::BoundFamily& family, std::uint64_t samples, std::uint64_t seed,
                    Strategy strategy, std::optional<Window> window = std::nullopt);

/// Family with lhs and rhs exchanged (id gets a "-reversed" suffix).
logbounds::BoundFamily reversed(const logbounds::BoundFamily& family);

/// |ln(1+z)| <= |z| over a grid of complex nodes; a node fails when it
/// classifies Inside.
Certificate certify_log_region(const region::Grid& grid);

/// Maps a constant delta to a perturbed family.
using Knob = std::function<logbounds::BoundFamily(double delta)>;

struct KnobInfo {
  std::string id;
  std::string formula;
  double sharp_value = 0.0;
  Knob knob;
};

/// eq09: ln(1+y) <= y/sqrt(y+d); eq10: 2x/(x+d) < ln(1+x);
/// eq13: ln(1+x) <= x(x+2)/(2(x+d)); eq13-numerator: ln(1+x) <= x(x+d)/(2(x+1));
/// eq37: e < (1+1/x)^(x+d).
const std::vector<KnobInfo>& knob_registry();
const KnobInfo& find_knob(const std::string& id);

struct SharpnessRow {
  double delta = 0.0;
  bool holds = false;
  double worst_gap = 0.0;
  std::uint64_t violations = 0;
  double worst_x = 0.0;
};

std::vector<SharpnessRow> sharpness_probe(const Knob& knob, const std::vector<double>& delta_grid,
                                          std::uint64_t samples, std::uint64_t seed,
                                          Strategy strategy = Strategy::LogUniform);

}  // namespace ineqlab::cert
