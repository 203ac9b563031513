#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "h4/incidence.hpp"

namespace h4 {

enum class Format { Text, Csv, Json };

/// "text", "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& s);

struct Census {
  std::map<FlatClass, int> counts;  // Point, line and plane classes
  IncidenceTable incidence;
  std::uint64_t bases = 0;
  std::uint64_t subsets = 0;
  int orthoframes = 0;
};

/// Counts of flats and incidences; bases and orthoframes are filled in by
/// the caller when computed.
Census compute_census(const Matroid& m);

/// Reference counts for M(H4): flats by class and the incidence table
/// (0 where a flat cannot contain the other). For a point and Pi3/Pi5 the
/// reference is the apex count; the plain containment totals are listed
/// separately.
const std::map<FlatClass, int>& reference_flat_counts();
const std::map<std::pair<FlatClass, FlatClass>, int>& reference_incidence();
inline constexpr int kPointPi3Total = 40;
inline constexpr int kPointPi5Total = 36;
inline constexpr std::uint64_t kReferenceBases = 398475;
inline constexpr int kReferenceOrthoframes = 75;

/// Human-readable descriptions of every deviation from the reference.
/// Bases and orthoframes are compared only when nonzero.
std::vector<std::string> census_mismatches(const Census& c);

std::string render_census(const Census& c, Format format);

}  // namespace h4
