#pragma once

// Runnable versions of the constructive steps used to bound rich degenerate
// flats and to split low-dimensional covers.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "flatinc/configuration.hpp"
#include "flatinc/essential.hpp"

namespace flatinc {

// ---------------------------------------------------------------------------
// Cover partition
// ---------------------------------------------------------------------------

struct PartitionResult {
  /// True when the cover is all lines, k is odd, and no split exists where
  /// both halves span at most a (k-1)-flat.
  bool all_lines_odd_k = false;
  /// True when the cover is a single flat of dimension k >= 2. The bound
  /// s + k/s - 1 <= k is tight at s = k as well as s = 1, so no split exists.
  bool single_k_flat = false;
  Cover first;   // longest ascending-dimension prefix with dim(join) <= k-1
  Cover second;  // the remainder
  int first_join_dim = -1;
  int second_join_dim = -1;
  /// Smallest dimension in `second` (0 when `second` is empty).
  int s = 0;
};

/// Sorts the flats by ascending dimension (stable) and splits off the
/// longest prefix whose join has dimension <= k-1. Throws BudgetExceeded when
/// the total dimension exceeds k, and InvariantViolated if the remainder
/// fails to fit for any reason other than the all-lines, odd-k case, or if
/// dim(join(second)) > s + k/s - 1.
PartitionResult partition_cover(const Cover& cover, int k);

// ---------------------------------------------------------------------------
// Witness refinement
// ---------------------------------------------------------------------------

struct Replacement {
  std::size_t input_index;  // position in the input list
  Flat original;
  Flat replacement;
  Weight lost = 0;  // weight in `original` but not in `replacement`
};

struct RefinedWitness {
  std::vector<Flat> flats;
  std::vector<std::size_t> covered;  // point indices covered by `flats`
  Weight covered_weight = 0;
  Weight input_covered_weight = 0;  // coverage of the input list
  std::vector<Replacement> replacements;
  std::vector<Flat> removed;  // flats dropped for holding too few points
  int join_dim = -1;
  /// Set when dim(join(flats)) < k, i.e. the refined flats no longer span the
  /// target flat.
  bool degenerate = false;
};

/// Smallest subflat G' of `flat`, by dimension t = 0, 1, ..., with weight
/// at least factor^(dim(flat) - t) * |P cap flat|. Ties go to the least
/// canonical basis; `flat` itself qualifies at t = dim(flat).
Flat smallest_heavy_subflat(const MultiPointSet& config, const Flat& flat,
                            const Scalar& factor);

/// Replaces each non-alpha'-degenerate flat of `witness` (in input order) by
/// smallest_heavy_subflat(., alpha'), then drops flats with fewer than
/// (1 - alpha')|P cap target| points. Throws PreconditionViolated unless
/// (k + alpha)/(k + 1) < alpha' < 1, the witness flats lie in `target` with
/// total dimension < k, and they cover more than alpha'|P cap target|.
RefinedWitness refine_witness(const MultiPointSet& config, const Flat& target,
                              const std::vector<Flat>& witness, const Scalar& alpha,
                              const Scalar& alpha_prime);

// ---------------------------------------------------------------------------
// Skew-line witness
// ---------------------------------------------------------------------------

struct SkewLinePair {
  Flat first;
  Flat second;
  Weight first_weight = 0;
  Weight second_weight = 0;
  Weight union_weight = 0;
};

/// For a 3-flat that is alpha-degenerate but not essentially
/// sqrt(alpha)-degenerate, finds two skew lines inside it, each holding at
/// least (sqrt(alpha) - alpha)|P cap target| points, whose union holds at
/// least sqrt(alpha)|P cap target|. `alpha` must be the square of a rational.
/// Returns nullopt when no such pair exists. Throws PreconditionViolated when
/// the hypotheses fail.
std::optional<SkewLinePair> skew_line_witness(const MultiPointSet& config,
                                              const Flat& target, const Scalar& alpha);

}  // namespace flatinc
