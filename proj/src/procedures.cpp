#include "flatinc/procedures.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "flatinc/error.hpp"
#include "flatinc/incidence.hpp"
#include "subsets.hpp"

namespace flatinc {

namespace {

Weight flat_weight(const MultiPointSet& config, const Flat& f) {
  return config.weight_of(config.incident(f));
}

int join_dim(const std::vector<Flat>& flats, int ambient_dim) {
  return join_all(flats, ambient_dim).dim();
}

}  // namespace

PartitionResult partition_cover(const Cover& cover, int k) {
  if (cover.total_dim > k) {
    throw Error(ErrorCode::BudgetExceeded, "total dimension " +
                                               std::to_string(cover.total_dim) +
                                               " exceeds k=" + std::to_string(k));
  }
  PartitionResult out;
  if (cover.flats.empty()) return out;
  const int d = cover.flats.front().ambient_dim();

  std::vector<Flat> sorted = cover.flats;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Flat& a, const Flat& b) { return a.dim() < b.dim(); });

  Flat prefix_join = Flat::empty(d);
  std::size_t m1 = 0;
  while (m1 < sorted.size()) {
    Flat next = join(prefix_join, sorted[m1]);
    if (next.dim() > k - 1) break;
    prefix_join = std::move(next);
    ++m1;
  }
  std::vector<Flat> first(sorted.begin(), sorted.begin() + static_cast<long>(m1));
  std::vector<Flat> second(sorted.begin() + static_cast<long>(m1), sorted.end());
  out.first_join_dim = prefix_join.dim();
  out.second_join_dim = join_dim(second, d);

  if (!second.empty()) {
    out.s = second.front().dim();
    const Scalar ceiling = Scalar(out.s) + Scalar(k) / out.s - 1;
    if (Scalar(out.second_join_dim) > ceiling) {
      throw Error(ErrorCode::InvariantViolated,
                  "dim(join(second)) = " + std::to_string(out.second_join_dim) +
                      " exceeds s + k/s - 1 = " + format_rational(ceiling));
    }
  }

  const bool all_lines = std::all_of(sorted.begin(), sorted.end(),
                                     [](const Flat& f) { return f.dim() == 1; });
  if (out.second_join_dim > k - 1) {
    // s = k also gives s + k/s - 1 = k: a lone k-flat cannot be split
    if (!all_lines && sorted.size() == 1 && sorted.front().dim() == k) {
      out.single_k_flat = true;
      out.first = Cover::make(std::move(first));
      out.second = Cover::make(std::move(second));
      return out;
    }
    if (!all_lines || k % 2 == 0) {
      throw Error(ErrorCode::InvariantViolated,
                  "remainder spans dimension " + std::to_string(out.second_join_dim) +
                      " > k-1 outside the all-lines, odd-k case");
    }
    out.all_lines_odd_k = true;
  }
  out.first = Cover::make(std::move(first));
  out.second = Cover::make(std::move(second));
  return out;
}

Flat smallest_heavy_subflat(const MultiPointSet& config, const Flat& flat,
                            const Scalar& factor) {
  const auto incident = config.incident(flat);
  const Weight total = config.weight_of(incident);
  const int dim = flat.dim();
  for (int t = 0; t < dim; ++t) {
    const Scalar threshold = pow(factor, static_cast<unsigned>(dim - t)) * total;
    std::optional<Flat> best;
    std::set<Flat> seen;
    detail::IndependentSubsets walk(config, incident, static_cast<std::size_t>(t + 1));
    walk.run([&](const std::vector<std::size_t>& chosen, const Flat& span) {
      if (chosen.size() != static_cast<std::size_t>(t + 1)) return true;
      if (!seen.insert(span).second) return true;
      if (best && !(span < *best)) return true;
      if (Scalar(flat_weight(config, span)) >= threshold) best = span;
      return true;
    });
    if (best) return *best;
  }
  return flat;
}

RefinedWitness refine_witness(const MultiPointSet& config, const Flat& target,
                              const std::vector<Flat>& witness, const Scalar& alpha,
                              const Scalar& alpha_prime) {
  const int k = target.dim();
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "target must have dim >= 1");
  if (alpha <= 0 || alpha >= 1) {
    throw Error(ErrorCode::PreconditionViolated, "alpha must lie in (0, 1)");
  }
  if (!(Scalar(k + alpha) / (k + 1) < alpha_prime && alpha_prime < 1)) {
    throw Error(ErrorCode::PreconditionViolated,
                "alpha' must lie in ((k + alpha)/(k + 1), 1)");
  }
  int budget = 0;
  for (const auto& f : witness) {
    if (!is_subflat(f, target)) {
      throw Error(ErrorCode::PreconditionViolated, "witness flat outside the target");
    }
    budget += std::max(f.dim(), 0);
  }
  if (budget >= k) {
    throw Error(ErrorCode::PreconditionViolated,
                "witness total dimension " + std::to_string(budget) + " is not < k");
  }

  const Weight total = flat_weight(config, target);
  auto covered_by = [&](const std::vector<Flat>& flats) {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < config.size(); ++i) {
      if (std::any_of(flats.begin(), flats.end(),
                      [&](const Flat& f) { return contains(f, config[i]); })) {
        pts.push_back(i);
      }
    }
    return pts;
  };

  RefinedWitness out;
  out.input_covered_weight = config.weight_of(covered_by(witness));
  if (!(Scalar(out.input_covered_weight) > alpha_prime * total)) {
    throw Error(ErrorCode::PreconditionViolated,
                "witness covers " + std::to_string(out.input_covered_weight) +
                    " points, not more than alpha' * " + std::to_string(total));
  }

  std::vector<Flat> current;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const Flat& g = witness[i];
    if (is_alpha_degenerate(config, g, alpha_prime)) {
      current.push_back(g);
      continue;
    }
    Flat smaller = smallest_heavy_subflat(config, g, alpha_prime);
    out.replacements.push_back(
        {i, g, smaller, flat_weight(config, g) - flat_weight(config, smaller)});
    current.push_back(std::move(smaller));
  }

  const Scalar floor_weight = (1 - alpha_prime) * total;
  for (auto& g : current) {
    if (Scalar(flat_weight(config, g)) < floor_weight) {
      out.removed.push_back(std::move(g));
    } else {
      out.flats.push_back(std::move(g));
    }
  }
  out.covered = covered_by(out.flats);
  out.covered_weight = config.weight_of(out.covered);
  out.join_dim = join_dim(out.flats, target.ambient_dim());
  out.degenerate = out.join_dim < k;
  return out;
}

std::optional<SkewLinePair> skew_line_witness(const MultiPointSet& config,
                                              const Flat& target, const Scalar& alpha) {
  if (target.dim() != 3) {
    throw Error(ErrorCode::PreconditionViolated, "target must be a 3-flat");
  }
  if (alpha <= 0 || alpha >= 1) {
    throw Error(ErrorCode::PreconditionViolated, "alpha must lie in (0, 1)");
  }
  const auto root = exact_sqrt(alpha);
  if (!root) {
    throw Error(ErrorCode::PreconditionViolated,
                "alpha = " + format_rational(alpha) + " is not a rational square");
  }
  if (!is_alpha_degenerate(config, target, alpha)) {
    throw Error(ErrorCode::PreconditionViolated, "target is not alpha-degenerate");
  }
  if (is_essentially_alpha_degenerate(config, target, *root)) {
    throw Error(ErrorCode::PreconditionViolated,
                "target is essentially sqrt(alpha)-degenerate");
  }

  const auto incident = config.incident(target);
  const Weight total = config.weight_of(incident);
  std::set<Flat> line_set;
  detail::IndependentSubsets walk(config, incident, 2);
  walk.run([&](const std::vector<std::size_t>& chosen, const Flat& span) {
    if (chosen.size() == 2) line_set.insert(span);
    return true;
  });
  std::vector<Flat> lines(line_set.begin(), line_set.end());
  std::vector<Weight> weights;
  for (const auto& l : lines) weights.push_back(flat_weight(config, l));

  const Scalar each_floor = (*root - alpha) * total;
  const Scalar union_floor = *root * total;
  std::optional<SkewLinePair> best;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Scalar(weights[i]) < each_floor) continue;
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (Scalar(weights[j]) < each_floor) continue;
      if (!meet(lines[i], lines[j]).is_empty()) continue;
      const Weight u = weights[i] + weights[j];
      if (Scalar(u) < union_floor) continue;
      if (!best || u > best->union_weight) {
        best = SkewLinePair{lines[i], lines[j], weights[i], weights[j], u};
      }
    }
  }
  return best;
}

}  // namespace flatinc
