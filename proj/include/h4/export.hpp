#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "h4/autos.hpp"
#include "h4/orthoframes.hpp"

namespace h4 {

inline constexpr const char* kArtifactName = "h4-matroid";
inline constexpr const char* kArtifactVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// One consistency check recorded in an export manifest.
struct ManifestCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

Json perm_json(const Perm& p);

/// [{id, coords: ["a+b*t", ...]}, ...]
Json roots_json(const RootSystem& roots);
/// {lines: [{points, class}], planes: [...], orthoframes: [[...], ...]}
Json flats_json(const Matroid& m, const std::vector<Orthoframe>& frames);
Json orthoframes_json(const std::vector<Orthoframe>& frames);
/// Generators, order, base, and a witness outside the geometric subgroup.
Json group_json(const AutGroup& aut, const PermGroup& geometric, const Perm& coset_witness);

/// {manifest: {artifact, version, export, checks, all_pass}, data: payload}
Json with_manifest(const std::string& what, Json payload, const std::vector<ManifestCheck>& checks);

/// Indented JSON in which arrays of scalars stay on one line.
std::string dump_compact_arrays(const Json& j, int indent = 2);

}  // namespace h4
