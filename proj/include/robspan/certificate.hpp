#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "robspan/geometry.hpp"
#include "robspan/spanner_check.hpp"

namespace robspan {

/// Witness that G \ S is a t-spanner of V \ S+ (deletion mode), or that
/// G \ S+ is (induced mode).
struct RobustnessCertificate {
  double t = 1.0;
  VertexSet failed;      // S
  VertexSet casualties;  // S+, a superset of S
  SpannerMode mode = SpannerMode::deletion;
  bool verified = false;
  bool minimal = false;  // only set by the exact oracle
  bool sampled = false;  // verification covered sampled pairs only
};

/// Re-checks the certificate against g from scratch.
SpannerCheck verify_certificate(const GeomGraph& g, const RobustnessCertificate& cert,
                                const SpannerCheckOptions& options = {});

// Text form:
//   t=<t> mode=<mode> |S|=<k> |S+|=<m> verified=<bool> minimal=<bool> sampled=<bool>
//   S: <indices>
//   S+: <indices>
std::string to_text(const RobustnessCertificate& cert);
RobustnessCertificate parse_certificate(std::istream& in);
void write_certificate(const std::filesystem::path& path, const RobustnessCertificate& cert);
RobustnessCertificate read_certificate(const std::filesystem::path& path);

}  // namespace robspan
