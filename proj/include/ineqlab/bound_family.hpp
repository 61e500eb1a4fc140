#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace ineqlab::logbounds {

/// Interval of the real line; each end may be open or closed.
struct Domain {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;

  [[nodiscard]] bool contains(double x) const {
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
  }
  [[nodiscard]] bool empty() const { return !(lo < hi) && !(lo == hi && lo_closed && hi_closed); }
};

/// Scalar inequality lhs(x) <= rhs(x) (strict: lhs(x) < rhs(x)) on a domain.
struct BoundFamily {
  std::string id;
  std::function<double(double)> lhs;
  std::function<double(double)> rhs;
  Domain domain;
  bool strict = false;
  std::string formula;
};

}  // namespace ineqlab::logbounds
