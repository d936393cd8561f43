#pragma once

// Spanned-flat enumeration, richness profiles and the degeneracy predicates.
//
// Richness always counts multiplicity; spanning is decided on the distinct
// support points. "r-rich" means at least r incident points.

#include <cstddef>
#include <utility>
#include <vector>

#include "flatinc/configuration.hpp"

namespace flatinc {

struct InventoryEntry {
  Flat flat;
  std::vector<std::size_t> points;  // ascending indices into the configuration
  Weight weight = 0;                // sum of multiplicities of `points`

  friend bool operator==(const InventoryEntry&, const InventoryEntry&) = default;
};

/// The k-flats spanned by a configuration, sorted by canonical basis.
struct FlatInventory {
  int k = 0;
  std::vector<InventoryEntry> entries;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const FlatInventory&, const FlatInventory&) = default;
};

struct RichProfile {
  int k = 0;
  std::vector<std::pair<Weight, std::size_t>> rows;  // (r, #entries with weight >= r)
};

struct EnumerationOptions {
  unsigned threads = 1;
};

/// All k-flats spanned by k+1 affinely independent support points, found by
/// enumerating (k+1)-subsets. Throws KOutOfRange unless 0 <= k <= d.
FlatInventory spanned_flats(const MultiPointSet& config, int k,
                            EnumerationOptions options = {});

/// Same inventory built by extending each spanned (k-1)-flat by one point,
/// starting from the points themselves. Shares no code path with
/// spanned_flats beyond the Flat primitives.
FlatInventory spanned_flats_incremental(const MultiPointSet& config, int k);

RichProfile rich_profile(const FlatInventory& inv, const std::vector<Weight>& r_values);

/// Incidence list of `flat` packaged as an inventory entry.
InventoryEntry incidence_entry(const MultiPointSet& config, const Flat& flat);

struct SubflatCoverage {
  Flat flat;
  Weight count = 0;
};

/// Heaviest flat of dimension <= dim(flat) - 1 inside `flat`, searched over
/// spans of subsets of `points` (which must lie in `flat`). Ties go to the
/// lexicographically least canonical basis. Throws EmptyPointList.
SubflatCoverage max_subflat_coverage(const MultiPointSet& config, const Flat& flat,
                                     const std::vector<std::size_t>& points);

bool is_alpha_degenerate(const MultiPointSet& config, const Flat& flat,
                         const Scalar& alpha);
bool is_essentially_alpha_degenerate(const MultiPointSet& config, const Flat& flat,
                                     const Scalar& alpha);
bool is_gamma_saturated(const MultiPointSet& config, const Flat& flat,
                        const Scalar& gamma);

/// Ordered (k'+1)-tuples of distinct support points whose span has dimension
/// k', each tuple weighted by the product of its multiplicities.
BigInt count_independent_lists(const MultiPointSet& points, int k_prime);

struct ProjectedConfiguration {
  MultiPointSet image;
  Weight dropped = 0;  // total multiplicity of points inside the center
};

/// Image of the configuration under project_from(center, .); points sharing
/// an image merge and add their multiplicities. Image points appear in order
/// of first occurrence.
ProjectedConfiguration project_configuration(const Flat& center,
                                             const MultiPointSet& config);

}  // namespace flatinc
