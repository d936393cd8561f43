#pragma once

// Essential dimension: the least total dimension of a family of flats, each
// of dimension >= 1, whose union holds the configuration. Solved exactly as a
// weighted set cover by branch and bound.
//
// Candidate flats are spans of point subsets (dimension >= 1) plus one fixed
// line through each point. A cover flat can always be shrunk to the span of
// the points it holds without raising its dimension, and a flat holding a
// single point is charged as a line, so this candidate set loses no optimum.
// Configurations are limited to 64 distinct points.

#include <cstddef>
#include <vector>

#include "flatinc/configuration.hpp"

namespace flatinc {

struct Cover {
  std::vector<Flat> flats;
  int total_dim = 0;

  /// Validates dim >= 1 and distinctness; computes total_dim.
  static Cover make(std::vector<Flat> flats);
};

struct Candidates {
  std::vector<Flat> spanned;   // distinct spans with 1 <= dim <= max_dim
  std::vector<Flat> fallback;  // per-point lines not already in `spanned`

  std::vector<Flat> all() const;
};

Candidates candidate_flats(const MultiPointSet& config, int max_dim);

struct EssentialDimension {
  int K = 0;
  Cover witness;
};

/// Throws EmptyConfiguration for an empty set.
EssentialDimension essential_dimension(const MultiPointSet& config);

struct CoverageResult {
  Weight covered = 0;
  Cover cover;
};

/// Heaviest point weight covered by flats of total dimension <= t, with a
/// witness cover.
CoverageResult best_cover(const MultiPointSet& config, int t);
Weight cover_max_points(const MultiPointSet& config, int t);

struct GProfile {
  std::vector<Weight> values;  // g_0 .. g_k
};

/// g_0 is the largest single multiplicity (1 for a plain nonempty set, 0 for
/// an empty one); g_i for i >= 1 is cover_max_points(config, i).
GProfile g_profile(const MultiPointSet& config, int k);

/// Prefix products prod_{i<=j} (n - g_i) for j = 0..k, n the total weight.
std::vector<BigInt> beck_lower_profile(const MultiPointSet& config, int k);

}  // namespace flatinc
