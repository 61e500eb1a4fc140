#include "ineqlab/certificate.hpp"

#include <algorithm>
#include <cmath>

namespace ineqlab::cert {
namespace {

bool worse(const Counterexample& a, const Counterexample& b) {
  if (a.gap != b.gap) return a.gap < b.gap;
  return a.index < b.index;
}

}  // namespace

CertificateBuilder::CertificateBuilder(std::string family_id, std::uint64_t seed, std::string strategy) {
  cert_.family_id = std::move(family_id);
  cert_.seed = seed;
  cert_.strategy = std::move(strategy);
}

void CertificateBuilder::record(const Sample& s) {
  ++cert_.samples;
  // NaN gaps count as failures: an undefined side is not a certified inequality.
  const double gap = std::isnan(s.gap) ? -std::numeric_limits<double>::infinity() : s.gap;
  if (cert_.samples == 1 || gap < cert_.worst_gap) {
    cert_.worst_gap = gap;
    cert_.worst_point = s.point;
  }
  if (gap < -s.tolerance) {
    ++cert_.violations;
    if (!cert_.first_violation) cert_.first_violation = s.index;
    cert_.counterexamples.push_back({s.index, s.point, s.lhs, s.rhs, gap});
    if (cert_.counterexamples.size() >= 4 * Certificate::kRetained) trim();
  } else if (s.strict && gap <= 0.0) {
    ++cert_.strict_violations;
  }
}

void CertificateBuilder::trim() {
  auto& ce = cert_.counterexamples;
  std::sort(ce.begin(), ce.end(), worse);
  if (ce.size() > Certificate::kRetained) ce.resize(Certificate::kRetained);
}

Certificate CertificateBuilder::finish() {
  trim();
  cert_.holds = cert_.violations == 0;
  return cert_;
}

}  // namespace ineqlab::cert
