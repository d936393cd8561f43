#pragma once

// Deterministic point configurations: the extremal examples for spanned-flat
// counts, integer grids, and seeded random sets. All coordinates are small
// integers.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flatinc/configuration.hpp"

namespace flatinc {

inline constexpr std::size_t kMaxGridPoints = 4096;

/// {0..m-1}^d embedded affinely. Throws SizeOverflow above kMaxGridPoints.
PointSet grid(int m, int d);

/// n/2 points on each of two skew lines of P^3: (1,t,0,0) and (1,0,t,1) for
/// t = 1..n/2. Throws OddN for odd n and ParameterConflict for n < 4.
PointSet skew_lines(int n);

struct FlatPlusLine {
  PointSet points;
  Flat flat;  // the (k-1)-flat holding the first n/2 points
  Flat line;  // the disjoint line holding the rest
};

/// n/2 points of the moment curve in the (k-1)-flat x_k = ... = x_d = 0 and
/// n/2 points on the line {x_k = s, x_{k+1} = 1}. Needs d >= k+1, k >= 2,
/// n even with n/2 >= k.
FlatPlusLine flat_plus_line(int n, int k, int d);

struct KLines {
  PointSet points;
  std::vector<Flat> lines;
};

/// n/k points on each of k pairwise skew lines. For d >= 2k-1 the lines are
/// jointly independent (their join is P^(2k-1)); for 3 <= d < 2k-1 they are
/// lines of one ruling of the quadric x0*x3 = x1*x2. Throws DivisibilityError
/// unless k divides n.
KLines k_lines(int n, int k, int d);

struct CommonLineFamily {
  PointSet points;  // n points on `line`
  Flat line;
  /// The j-th plane of the pencil through `line` (all distinct for j >= 0).
  Flat plane(int j) const;
};

CommonLineFamily planes_through_common_line(int n);

/// Integer points with coordinates in [-16, 16] drawn from a 64-bit Mersenne
/// twister, accepted only if every subset of size <= d+1 stays independent.
/// Throws RetryLimit after 100000 rejected draws.
PointSet random_general_position(int n, int d, std::uint64_t seed);

/// Distinct integer points from the box [0, box)^d, so collinearities and
/// coplanarities are common. Optional multiplicities in [1, max_mult].
MultiPointSet random_configuration(int n, int d, int box, std::uint64_t seed,
                                   Weight max_mult = 1);

/// Named construction for the CLI: grid, skew_lines, flat_plus_line, k_lines,
/// common_line, random_gp, random. Missing parameters take documented
/// defaults; unknown names throw ParameterError.
struct ConstructionSpec {
  std::string name;
  std::map<std::string, std::int64_t> params;
};

MultiPointSet build_construction(const ConstructionSpec& spec);

}  // namespace flatinc
