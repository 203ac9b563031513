#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "h4/roots.hpp"

namespace h4 {

struct Claim {
  std::string id;
  int criterion = 0;   // acceptance criterion number, 1..21
  std::string anchor;  // short statement of what is claimed
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  int jobs = 1;
  std::uint64_t seed = 60;
  std::uint64_t property_cases = 10000;
};

struct VerificationReport {
  std::vector<Claim> claims;
  /// Wall time of each shared computation (matroid, bases, aut search, ...).
  std::map<std::string, double> stage_ms;
  std::uint64_t seed = 0;

  bool all_pass() const;
  int failures() const;
  /// Timings are left out unless asked for, so reports compare byte-equal
  /// across runs.
  std::string to_json(bool with_timing) const;
  std::string to_text() const;
};

/// Runs every claim against the matroid of `columns`. A failing or throwing
/// claim is recorded as a failure; the run always completes.
VerificationReport run_verify_all(const std::vector<Vec4>& columns, const VerifyOptions& options);

}  // namespace h4
