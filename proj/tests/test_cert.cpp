#include <cmath>
#include <cstring>

#include "doctest.h"
#include "ineqlab/cert.hpp"
#include "ineqlab/logbounds.hpp"

using namespace ineqlab;
using namespace ineqlab::cert;
using logbounds::find_family;

namespace {

bool same(const Certificate& a, const Certificate& b) {
  if (a.family_id != b.family_id || a.strategy != b.strategy || a.samples != b.samples || a.seed != b.seed ||
      a.holds != b.holds || a.violations != b.violations || a.strict_violations != b.strict_violations ||
      a.first_violation != b.first_violation || a.counterexamples.size() != b.counterexamples.size()) {
    return false;
  }
  if (std::memcmp(&a.worst_gap, &b.worst_gap, sizeof(double)) != 0) return false;
  if (a.worst_point.x != b.worst_point.x || a.worst_point.y != b.worst_point.y) return false;
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    const auto& p = a.counterexamples[i];
    const auto& q = b.counterexamples[i];
    if (p.index != q.index || p.gap != q.gap || p.point.x != q.point.x || p.lhs != q.lhs || p.rhs != q.rhs) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("strategy names") {
  CHECK(parse_strategy("log-uniform") == Strategy::LogUniform);
  CHECK(std::string(to_string(Strategy::Grid)) == "grid");
  CHECK_THROWS_AS(parse_strategy("sobol"), ParameterError);
}

TEST_CASE("sampling windows") {
  const auto w = sampling_window(find_family("eq05"), Strategy::LogUniform);
  CHECK(w.lo == 1e-6);
  CHECK(w.hi == 1e6);
  const auto z = sampling_window(find_family("zd57-c3"), Strategy::Uniform);
  CHECK(z.lo == 3.0);
  CHECK_THROWS_AS(sampling_window(find_family("zd57-c3"), Strategy::LogUniform, Window{0.1, 1.0}), DomainError);
}

TEST_CASE("certify a true family") {
  const auto c = certify(find_family("eq05"), 10000, 42, Strategy::LogUniform, Window{0.0, 100.0});
  CHECK(c.holds);
  CHECK(c.samples == 10000);
  CHECK(c.violations == 0);
  CHECK_FALSE(c.first_violation.has_value());
  CHECK(c.worst_gap >= 0.0);
  CHECK(c.worst_gap < 1e-10);
  const auto wide = certify(find_family("eq05"), 1000, 42, Strategy::LogUniform, Window{0.0, 100.0});
  CHECK(c.worst_gap <= wide.worst_gap);
}

TEST_CASE("every registry family except the known failures certifies") {
  for (const auto& f : logbounds::bound_registry()) {
    if (f.id == "zd58a" || f.id == "zd58b") continue;
    CAPTURE(f.id);
    CHECK(certify(f, 5000, 1, Strategy::LogUniform).holds);
    CHECK(certify(f, 2000, 1, Strategy::Grid).holds);
  }
  CHECK_FALSE(certify(find_family("zd58a"), 5000, 1, Strategy::LogUniform, Window{1.0, 1.3}).holds);
}

TEST_CASE("reversed families fail at the first sample") {
  const auto c = certify(reversed(find_family("eq06")), 1000, 7, Strategy::LogUniform);
  CHECK_FALSE(c.holds);
  REQUIRE(c.first_violation.has_value());
  CHECK(*c.first_violation == 0);
  CHECK(c.family_id == "eq06-reversed");
  CHECK(c.counterexamples.size() == Certificate::kRetained);
  for (std::size_t i = 1; i < c.counterexamples.size(); ++i) {
    CHECK(c.counterexamples[i - 1].gap <= c.counterexamples[i].gap);
  }
}

TEST_CASE("certificates are deterministic") {
  for (auto s : {Strategy::Uniform, Strategy::LogUniform, Strategy::Grid}) {
    const auto a = certify(reversed(find_family("eq13")), 20000, 99, s);
    const auto b = certify(reversed(find_family("eq13")), 20000, 99, s);
    CHECK(same(a, b));
  }
}

TEST_CASE("counterexample counts never decrease with more samples") {
  const auto fam = reversed(find_family("eq20-upper"));
  std::uint64_t prev = 0;
  for (std::uint64_t n : {10u, 100u, 1000u, 10000u}) {
    const auto c = certify(fam, n, 5, Strategy::Uniform);
    CHECK(c.violations >= prev);
    prev = c.violations;
  }
  const auto knob = find_knob("eq10").knob(1.99);
  std::uint64_t prev_knob = 0;
  for (std::uint64_t n : {100u, 1000u, 10000u}) {
    const auto c = certify(knob, n, 5, Strategy::LogUniform);
    CHECK(c.violations >= prev_knob);
    prev_knob = c.violations;
  }
}

TEST_CASE("complex logarithm region certificate") {
  const auto c = certify_log_region(region::Grid{-3, 3, -3, 3, 101, 101});
  CHECK_FALSE(c.holds);
  CHECK(c.family_id == "eq16-complex");
  CHECK(c.worst_point.dim == 2);
  CHECK(std::abs(c.worst_point.x + 1.0) < 0.1);
  for (const auto& ce : c.counterexamples) CHECK(std::abs(ce.point.x + 1.0) < 0.5);
}

TEST_CASE("sharpness knobs flip at their sharp values") {
  for (const auto& k : knob_registry()) {
    CAPTURE(k.id);
    const double d = k.sharp_value;
    const bool raising_breaks = k.id == "eq09" || k.id == "eq13";
    const auto rows = sharpness_probe(k.knob, {d, d - 0.01, d + 0.01}, 10000, 1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].holds);
    CHECK_FALSE(rows[raising_breaks ? 2 : 1].holds);
    CHECK(rows[raising_breaks ? 1 : 2].holds);
  }
  CHECK_THROWS_AS(find_knob("eq05"), ParameterError);
}
