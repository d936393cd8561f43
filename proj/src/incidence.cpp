#include "flatinc/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "flatinc/error.hpp"
#include "flatinc/essential.hpp"
#include "subsets.hpp"

namespace flatinc {

namespace {

using detail::IndependentSubsets;
using detail::all_indices;

void check_k(const MultiPointSet& config, int k) {
  if (k < 0 || k > config.ambient_dim()) {
    throw Error(ErrorCode::KOutOfRange, "k=" + std::to_string(k) + " outside [0, " +
                                            std::to_string(config.ambient_dim()) + "]");
  }
}

FlatInventory build_inventory(const MultiPointSet& config, int k,
                              const std::set<Flat>& flats) {
  FlatInventory inv;
  inv.k = k;
  inv.entries.reserve(flats.size());
  for (const auto& f : flats) inv.entries.push_back(incidence_entry(config, f));
  return inv;
}

}  // namespace

InventoryEntry incidence_entry(const MultiPointSet& config, const Flat& flat) {
  InventoryEntry e{flat, config.incident(flat), 0};
  e.weight = config.weight_of(e.points);
  return e;
}

FlatInventory spanned_flats(const MultiPointSet& config, int k,
                            EnumerationOptions options) {
  check_k(config, k);
  const auto target = static_cast<std::size_t>(k + 1);
  const unsigned threads = std::max(1U, options.threads);

  std::vector<std::set<Flat>> partial(threads);
  auto worker = [&](unsigned t) {
    IndependentSubsets walk(config, all_indices(config.size()), target);
    walk.run(
        [&](const std::vector<std::size_t>& chosen, const Flat& span) {
          if (chosen.size() == target) partial[t].insert(span);
          return true;
        },
        t, threads);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  std::set<Flat> flats;
  for (auto& s : partial) flats.merge(s);
  return build_inventory(config, k, flats);
}

FlatInventory spanned_flats_incremental(const MultiPointSet& config, int k) {
  check_k(config, k);
  const int d = config.ambient_dim();
  std::set<Flat> level;
  for (const auto& p : config.points()) level.insert(point_flat(p));
  for (int j = 1; j <= k; ++j) {
    std::set<Flat> next;
    for (const auto& f : level) {
      for (const auto& p : config.points()) {
        Matrix rows = f.basis();
        rows.push_back(p.coords());
        if (rank_of(rows) == f.basis().size()) continue;
        next.insert(Flat::from_rows(d, std::move(rows)));
      }
    }
    level = std::move(next);
  }

  FlatInventory inv;
  inv.k = k;
  for (const auto& f : level) {
    InventoryEntry e{f, {}, 0};
    for (std::size_t i = 0; i < config.size(); ++i) {
      Matrix rows = f.basis();
      rows.push_back(config[i].coords());
      if (rank_of(std::move(rows)) == f.basis().size()) {
        e.points.push_back(i);
        e.weight += config.multiplicity(i);
      }
    }
    inv.entries.push_back(std::move(e));
  }
  return inv;
}

RichProfile rich_profile(const FlatInventory& inv, const std::vector<Weight>& r_values) {
  RichProfile profile;
  profile.k = inv.k;
  for (Weight r : r_values) {
    auto count = std::count_if(inv.entries.begin(), inv.entries.end(),
                               [r](const InventoryEntry& e) { return e.weight >= r; });
    profile.rows.emplace_back(r, static_cast<std::size_t>(count));
  }
  return profile;
}

SubflatCoverage max_subflat_coverage(const MultiPointSet& config, const Flat& flat,
                                     const std::vector<std::size_t>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyPointList, "no incident points");
  for (auto i : points) {
    if (!contains(flat, config[i])) {
      throw Error(ErrorCode::PreconditionViolated,
                  "point " + std::to_string(i) + " does not lie in the flat");
    }
  }
  SubflatCoverage best{Flat::empty(config.ambient_dim()), 0};
  const int k = flat.dim();
  if (k <= 0) return best;

  std::set<Flat> seen;
  IndependentSubsets walk(config, points, static_cast<std::size_t>(k));
  walk.run([&](const std::vector<std::size_t>&, const Flat& span) {
    if (!seen.insert(span).second) return true;
    Weight w = 0;
    for (auto i : points) {
      if (contains(span, config[i])) w += config.multiplicity(i);
    }
    if (w > best.count || (w == best.count && span < best.flat)) best = {span, w};
    return true;
  });
  return best;
}

bool is_alpha_degenerate(const MultiPointSet& config, const Flat& flat,
                         const Scalar& alpha) {
  if (alpha <= 0) throw Error(ErrorCode::AlphaOutOfRange, "alpha must be > 0");
  auto incident = config.incident(flat);
  if (incident.empty()) return true;
  const Weight total = config.weight_of(incident);
  return Scalar(max_subflat_coverage(config, flat, incident).count) <= alpha * total;
}

bool is_essentially_alpha_degenerate(const MultiPointSet& config, const Flat& flat,
                                     const Scalar& alpha) {
  if (alpha <= 0) throw Error(ErrorCode::AlphaOutOfRange, "alpha must be > 0");
  auto incident = config.incident(flat);
  if (incident.empty()) return true;
  const Weight total = config.weight_of(incident);
  const int budget = flat.dim() - 1;
  const Weight covered = budget <= 0 ? 0 : cover_max_points(config.subset(incident), budget);
  return Scalar(covered) <= alpha * total;
}

bool is_gamma_saturated(const MultiPointSet& config, const Flat& flat,
                        const Scalar& gamma) {
  if (gamma <= 0) throw Error(ErrorCode::GammaOutOfRange, "gamma must be > 0");
  const int k = flat.dim();
  if (k < 1) throw Error(ErrorCode::KOutOfRange, "gamma-saturation needs dim >= 1");
  auto incident = config.incident(flat);
  const Weight total = config.weight_of(incident);
  const auto spanned = spanned_flats(config.subset(incident), k - 1).size();
  return Scalar(static_cast<long>(spanned)) >=
         gamma * pow(Scalar(total), static_cast<unsigned>(k));
}

BigInt count_independent_lists(const MultiPointSet& points, int k_prime) {
  if (k_prime < 0) throw Error(ErrorCode::KOutOfRange, "k' must be >= 0");
  const auto size = static_cast<std::size_t>(k_prime + 1);
  BigInt orderings = 1;
  for (std::size_t i = 2; i <= size; ++i) orderings *= static_cast<unsigned long>(i);

  BigInt total = 0;
  IndependentSubsets walk(points, all_indices(points.size()), size);
  walk.run([&](const std::vector<std::size_t>& chosen, const Flat&) {
    if (chosen.size() == size) {
      BigInt weight = orderings;
      for (auto i : chosen) weight *= static_cast<long>(points.multiplicity(i));
      total += weight;
    }
    return true;
  });
  return total;
}

ProjectedConfiguration project_configuration(const Flat& center,
                                             const MultiPointSet& config) {
  if (center.ambient_dim() != config.ambient_dim()) {
    throw Error(ErrorCode::MixedAmbient, "center and configuration differ in ambient");
  }
  const int target_dim = config.ambient_dim() - center.dim() - 1;
  std::vector<Point> pts;
  std::vector<Weight> mult;
  std::map<Point, std::size_t> slot;
  Weight dropped = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (contains(center, config[i])) {
      dropped += config.multiplicity(i);
      continue;
    }
    Point image = project_from(center, config[i]);
    auto [it, fresh] = slot.try_emplace(image, pts.size());
    if (fresh) {
      pts.push_back(std::move(image));
      mult.push_back(config.multiplicity(i));
    } else {
      mult[it->second] += config.multiplicity(i);
    }
  }
  return {MultiPointSet(target_dim, std::move(pts), std::move(mult)), dropped};
}

}  // namespace flatinc
