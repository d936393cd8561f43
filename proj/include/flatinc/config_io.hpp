#pragma once

// Configuration files.
//
//   {
//     "schema": 1,
//     "ambient_dim": 2,
//     "projective": false,
//     "points": [["1", "2/3"], {"coords": ["0", "1"], "multiplicity": 2}]
//   }
//
// Coordinates are rational strings "a" or "a/b" in lowest terms. Affine
// files give d coordinates per point; projective files give d+1 homogeneous
// coordinates, which are canonicalized on load.

#include <filesystem>
#include <string>
#include <string_view>

#include "flatinc/configuration.hpp"

namespace flatinc {

MultiPointSet parse_config(std::string_view text);
MultiPointSet load_config(const std::filesystem::path& path);

/// Canonical serialization: affine when every point is finite, projective
/// otherwise; sorted keys; multiplicity objects only where it exceeds 1.
std::string serialize_config(const MultiPointSet& config);
void save_config(const MultiPointSet& config, const std::filesystem::path& path);

}  // namespace flatinc
