#pragma once

// Batch verification of the exact finite claims about spanned and rich flats.
// Every suite is a pure function of its arguments: the same inputs give a
// byte-identical report regardless of thread count.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flatinc/configuration.hpp"
#include "flatinc/report.hpp"

namespace flatinc {

struct SuiteOptions {
  unsigned threads = 1;
};

/// dim(join) + dim(meet) = dim(a) + dim(b) on random flat pairs of P^4, and
/// dim(join(H)) <= |H| - 1 + sum dim on random families of 1..4 flats.
SuiteReport verify_dim_identities(std::uint64_t seed, std::size_t pair_trials,
                                  std::size_t family_trials = 200);

/// Counts r-rich alpha-degenerate spanned k-flats and checks the count
/// against (1-alpha)^-k n^(k+1) / r^(k+1), plus the ordered independent list
/// bound (1-alpha)^k' r^(k'+1) for each such flat and each k' <= k.
/// Throws ParameterError unless 0 < alpha < 1 and r >= 1.
SuiteReport verify_lemma8(const MultiPointSet& config, int k, Weight r,
                          const Scalar& alpha, SuiteOptions options = {});

/// The configurations swept by verify_lemma8_batch: a few constructions and
/// seeded random sets with n <= 12 (total multiplicity), d in 2..4.
std::vector<std::pair<std::string, MultiPointSet>> lemma8_configurations(std::uint64_t seed,
                                                                         int count);

/// verify_lemma8 over `configurations` sets, every k <= min(2, d),
/// alpha in {1/2, 3/4} and r in 3..n.
SuiteReport verify_lemma8_batch(std::uint64_t seed, int configurations = 50,
                                SuiteOptions options = {});

/// Essentially-alpha-degenerate implies alpha-degenerate, on every spanned
/// k-flat, k >= 2. Flats showing the converse gap are recorded as witnesses.
/// For k = 1 the check is skipped with a note: no nonempty set has essential
/// dimension 0, so the essential condition says nothing about single points.
SuiteReport verify_degeneracy_implication(const MultiPointSet& config, int k,
                                          const Scalar& alpha, SuiteOptions options = {});

/// verify_degeneracy_implication across the lemma8 and standard
/// configurations, k in 2..3, several alphas. Gap witnesses are collected.
SuiteReport verify_implication_batch(std::uint64_t seed, SuiteOptions options = {});

/// K of a collinear set, the 3x3 grid and two skew 3-point lines, with
/// witness checks, then cover_max_points monotonicity on `sets` seeded sets.
SuiteReport verify_essential_dimension(std::uint64_t seed, int sets = 20);

/// The extremal constructions for spanned k-flat counts: the flat-plus-line
/// count and containment, the odd-k lines richness, the skew-lines counts for
/// k = 2, and the cover partition branch for each. Throws ParameterError for
/// k < 2.
SuiteReport verify_beck_constructions(int k, SuiteOptions options = {});

/// Every cover with total dimension <= 4 drawn from the flats spanned by
/// seeded 7-point sets in P^4, partitioned for every admissible k <= 4.
SuiteReport verify_partition_exhaustive(std::uint64_t seed, int configurations = 3);

/// Subset enumeration against the incremental construction (and against the
/// threaded enumeration) on the named constructions with n <= 12, k <= 3.
SuiteReport verify_oracle_equivalence(std::uint64_t seed, SuiteOptions options = {});

/// For each construction and every k >= K(P): f_{k-1} = f_k = 0 or
/// f_{k-1} > f_k.
SuiteReport verify_spanned_ordering(std::uint64_t seed, SuiteOptions options = {});

/// Counts per (r, alpha) of rich, alpha-degenerate, essentially
/// alpha-degenerate and gamma-saturated spanned k-flats, with f_k, K(P), the
/// g-profile and the Beck product profile. Bound expressions are evaluated
/// for comparison only.
SuiteReport rich_report(const MultiPointSet& config, int k, const std::vector<Weight>& r_list,
                        const std::vector<Scalar>& alpha_list, const Scalar& gamma,
                        SuiteOptions options = {});

/// Constructions shared by the ordering and equivalence suites.
std::vector<std::pair<std::string, MultiPointSet>> standard_constructions(std::uint64_t seed);

/// Named batch suites for the CLI: dim_identities, lemma8, implication, beck,
/// partition, equivalence, ordering, essential.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed, SuiteOptions options = {});

}  // namespace flatinc
