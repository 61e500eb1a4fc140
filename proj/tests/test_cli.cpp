#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ineqlab/cli.hpp"
#include "ineqlab/complexregion.hpp"
#include "json.hpp"

using namespace ineqlab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, sep);) v.push_back(f);
  return v;
}

}  // namespace

TEST_CASE("means eval prints the bare value") {
  const auto r = run({"means", "eval", "--kind", "power", "--alpha", "0", "--x", "2", "--y", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("certify emits a JSON certificate") {
  const auto r = run({"certify", "--family", "eq05", "--samples", "10000", "--seed", "42", "--output", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("holds") == true);
  CHECK(j.at("samples") == 10000);
  CHECK(j.at("seed") == 42);
  CHECK(j.at("family") == "eq05");
  CHECK(j.at("counterexamples").empty());
}

TEST_CASE("certify exits 1 on counterexamples") {
  const auto r = run({"certify", "--family", "eq16-complex", "--nx", "100", "--ny", "100", "--output", "json"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("holds") == false);
  CHECK(j.at("violations").get<int>() > 0);
}

TEST_CASE("complex curve CSV points lie on the quartic") {
  const auto r = run({"complex", "curve", "--points", "1000", "--output", "csv"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2001);
  const auto header = split(ls[0], ',');
  std::size_t re_col = 0, im_col = 0;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "re") re_col = i;
    if (header[i] == "im") im_col = i;
  }
  REQUIRE(re_col != im_col);
  int failures = 0;
  for (std::size_t k = 1; k < ls.size(); ++k) {
    const auto f = split(ls[k], ',');
    const region::Complex s{std::stod(f[re_col]), std::stod(f[im_col])};
    if (std::abs(region::scaled_quartic_residual(s)) > 1e-9) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"means", "eval", "--kind", "power", "--bogus", "1"}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"certify", "--family", "eq99"}).code == 2);
  const auto r = run({"sums", "partial", "--model", "harmonic", "--n", "0"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::vector<std::string>> cmds{
      {"bounds", "certify", "--family", "eq13", "--samples", "5000", "--seed", "3", "--output", "json"},
      {"complex", "log-scan", "--nx", "41", "--ny", "41", "--rays", "8", "--output", "csv"},
      {"means", "rado-check", "--alpha", "-3", "--samples", "2000", "--seed", "9", "--output", "json"},
      {"bounds", "sharpness", "--family", "eq10", "--deltas", "1.99,2", "--output", "csv"},
  };
  for (const auto& c : cmds) {
    CAPTURE(c[1]);
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("every subcommand runs") {
  const std::vector<std::vector<std::string>> cmds{
      {"means", "conjugate", "--kind", "power", "--alpha", "1", "--x", "2", "--y", "4"},
      {"means", "iterate", "--m", "arith", "--n", "geom", "--x0", "1", "--y0", "0.5"},
      {"means", "profile", "--kind", "power", "--alpha", "0", "--points", "11"},
      {"bounds", "list"},
      {"bounds", "chain", "--id", "eq14", "--x", "1"},
      {"bounds", "eps", "--family", "e_exponent", "--x", "1"},
      {"bounds", "cf", "--n", "3"},
      {"sums", "euler-constant", "--model", "harmonic", "--n", "1000"},
      {"sums", "sl", "--fixture", "eq22", "--n-max", "100"},
      {"sums", "ak", "--upto", "5"},
      {"sums", "limits", "--order", "1"},
      {"sums", "zeta-cont", "--a", "0.5", "--n", "1000"},
      {"zeta", "bernoulli", "--upto", "10"},
      {"zeta", "even", "--n", "2"},
      {"zeta", "eta", "--a", "2"},
      {"zeta", "direct", "--s", "2", "--terms", "100"},
      {"solve", "bisect", "--problem", "sqrt2", "--lo", "1", "--hi", "2"},
      {"solve", "newton", "--problem", "sqrt2", "--x0", "1"},
      {"solve", "fixed-point", "--problem", "eps-e", "--lambda", "-7.47", "--x0", "1"},
      {"solve", "lambda", "--problem", "eps-e", "--x", "0.413053"},
      {"young", "compare", "--x", "5", "--y", "130", "--p", "4"},
      {"young", "critical", "--x", "0.5", "--p", "4"},
      {"classic", "cb", "--u", "1,2,3", "--v", "3,1,2"},
      {"classic", "minkowski", "--u", "3,0", "--v", "0,4"},
      {"classic", "holder", "--u", "1,1", "--v", "1,1", "--p", "3"},
      {"complex", "classify", "--which", "amgm", "--re", "-6", "--im", "0"},
      {"complex", "axes"},
      {"complex", "eps-sup", "--nx", "21", "--ny", "21"},
  };
  for (const auto& c : cmds) {
    CAPTURE(c[0] + " " + c[1]);
    for (const char* fmt : {"text", "json", "csv"}) {
      auto args = c;
      args.push_back("--output");
      args.push_back(fmt);
      const auto r = run(args);
      CHECK(r.code == 0);
      CHECK(r.err.empty());
      CHECK_FALSE(r.out.empty());
      if (std::string(fmt) == "json") CHECK(nlohmann::json::accept(r.out));
    }
  }
}
