#include "flatinc/essential.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

#include "flatinc/error.hpp"
#include "subsets.hpp"

namespace flatinc {

namespace {

using Mask = std::uint64_t;

struct Candidate {
  Flat flat;
  int dim;
  Mask mask;
};

void check_size(const MultiPointSet& config) {
  if (config.size() > 64) {
    throw Error(ErrorCode::SizeOverflow,
                "cover search supports at most 64 points, got " +
                    std::to_string(config.size()));
  }
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

Weight mask_weight(const MultiPointSet& config, Mask m) {
  Weight w = 0;
  while (m != 0) {
    w += config.multiplicity(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return w;
}

// Candidates with their incidence masks, minus any candidate that another
// candidate of no larger dimension covers.
std::vector<Candidate> build_candidates(const MultiPointSet& config, int max_dim) {
  std::vector<Candidate> raw;
  for (auto& f : candidate_flats(config, max_dim).all()) {
    Mask m = 0;
    for (std::size_t i = 0; i < config.size(); ++i) {
      if (contains(f, config[i])) m |= Mask{1} << i;
    }
    const int dim = f.dim();
    raw.push_back({std::move(f), dim, m});
  }
  std::sort(raw.begin(), raw.end(), [](const Candidate& a, const Candidate& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    const int pa = std::popcount(a.mask), pb = std::popcount(b.mask);
    if (pa != pb) return pa > pb;
    return a.flat < b.flat;
  });
  std::vector<Candidate> kept;
  for (auto& c : raw) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Candidate& k) {
      return (c.mask & ~k.mask) == 0;
    });
    if (!dominated) kept.push_back(std::move(c));
  }
  return kept;
}

class MinDimensionCover {
 public:
  MinDimensionCover(const MultiPointSet& config, std::vector<Candidate> cands)
      : cands_(std::move(cands)), full_(full_mask(config.size())) {
    containing_.resize(config.size());
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      for (std::size_t i = 0; i < config.size(); ++i) {
        if (cands_[c].mask >> i & 1) containing_[i].push_back(c);
      }
    }
  }

  EssentialDimension solve() {
    search(0, 0);
    std::vector<Flat> flats;
    for (auto c : best_choice_) flats.push_back(cands_[c].flat);
    return {best_, Cover::make(std::move(flats))};
  }

 private:
  // Smallest total dimension that could still cover the uncovered points,
  // assuming every unit of dimension covers as many as the best ratio does.
  int lower_bound(Mask covered) const {
    const Mask open = full_ & ~covered;
    const int u = std::popcount(open);
    if (u == 0) return 0;
    int best_gain = 0, best_dim = 1;
    for (const auto& c : cands_) {
      const int g = std::popcount(c.mask & open);
      if (g * best_dim > best_gain * c.dim) {
        best_gain = g;
        best_dim = c.dim;
      }
    }
    if (best_gain == 0) return std::numeric_limits<int>::max() / 2;
    return (u * best_dim + best_gain - 1) / best_gain;
  }

  void search(Mask covered, int cost) {
    if (covered == full_) {
      if (cost < best_) {
        best_ = cost;
        best_choice_ = choice_;
      }
      return;
    }
    if (cost + lower_bound(covered) >= best_) return;

    const Mask open = full_ & ~covered;
    std::size_t pivot = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (Mask m = open; m != 0; m &= m - 1) {
      auto i = static_cast<std::size_t>(std::countr_zero(m));
      if (containing_[i].size() < fewest) {
        fewest = containing_[i].size();
        pivot = i;
      }
    }

    std::vector<std::size_t> order = containing_[pivot];
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const int ga = std::popcount(cands_[a].mask & open);
      const int gb = std::popcount(cands_[b].mask & open);
      return ga * cands_[b].dim > gb * cands_[a].dim;
    });
    for (auto c : order) {
      choice_.push_back(c);
      search(covered | cands_[c].mask, cost + cands_[c].dim);
      choice_.pop_back();
    }
  }

  std::vector<Candidate> cands_;
  Mask full_;
  std::vector<std::vector<std::size_t>> containing_;
  int best_ = std::numeric_limits<int>::max();
  std::vector<std::size_t> best_choice_;
  std::vector<std::size_t> choice_;
};

class MaxWeightCover {
 public:
  MaxWeightCover(const MultiPointSet& config, std::vector<Candidate> cands)
      : config_(config), cands_(std::move(cands)), total_(config.total()) {
    for (const auto& c : cands_) {
      const Weight w = mask_weight(config_, c.mask);
      weight_.push_back(w);
      if (w * ratio_dim_ > ratio_weight_ * c.dim) {
        ratio_weight_ = w;
        ratio_dim_ = c.dim;
      }
    }
    order_.resize(cands_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return weight_[a] * cands_[b].dim > weight_[b] * cands_[a].dim;
    });
  }

  CoverageResult solve(int budget) {
    search(0, budget, 0, 0);
    std::vector<Flat> flats;
    for (auto c : best_choice_) flats.push_back(cands_[c].flat);
    return {best_, Cover::make(std::move(flats))};
  }

 private:
  void search(std::size_t start, int budget, Mask covered, Weight w) {
    if (w > best_) {
      best_ = w;
      best_choice_ = choice_;
    }
    if (best_ == total_) return;
    const Weight optimistic = std::min<Weight>(total_ - w, budget * ratio_weight_ / ratio_dim_);
    if (w + optimistic <= best_) return;
    for (std::size_t pos = start; pos < order_.size(); ++pos) {
      const std::size_t c = order_[pos];
      if (cands_[c].dim > budget) continue;
      const Mask gain = cands_[c].mask & ~covered;
      if (gain == 0) continue;
      choice_.push_back(c);
      search(pos + 1, budget - cands_[c].dim, covered | cands_[c].mask,
             w + mask_weight(config_, gain));
      choice_.pop_back();
      if (best_ == total_) return;
    }
  }

  const MultiPointSet& config_;
  std::vector<Candidate> cands_;
  std::vector<Weight> weight_;
  std::vector<std::size_t> order_;
  Weight total_;
  Weight ratio_weight_ = 0;
  int ratio_dim_ = 1;
  Weight best_ = 0;
  std::vector<std::size_t> best_choice_;
  std::vector<std::size_t> choice_;
};

// A line through p: p joined with the first coordinate point distinct from it.
Flat fallback_line(const Point& p) {
  const int d = p.ambient_dim();
  for (int j = 0; j <= d; ++j) {
    Vector e(d + 1, Scalar(0));
    e[j] = 1;
    Flat line = Flat::from_rows(d, {p.coords(), e});
    if (line.dim() == 1) return line;
  }
  throw Error(ErrorCode::ParameterError, "no line exists in P^0");
}

}  // namespace

Cover Cover::make(std::vector<Flat> flats) {
  Cover c;
  std::set<Flat> seen;
  for (const auto& f : flats) {
    if (f.dim() < 1) throw Error(ErrorCode::InvariantViolated, "cover flat of dim < 1");
    if (!seen.insert(f).second) {
      throw Error(ErrorCode::InvariantViolated, "duplicate flat in cover");
    }
    c.total_dim += f.dim();
  }
  c.flats = std::move(flats);
  return c;
}

std::vector<Flat> Candidates::all() const {
  std::vector<Flat> out = spanned;
  out.insert(out.end(), fallback.begin(), fallback.end());
  return out;
}

Candidates candidate_flats(const MultiPointSet& config, int max_dim) {
  if (max_dim < 1) throw Error(ErrorCode::ParameterError, "max_dim must be >= 1");
  Candidates out;
  if (config.size() == 0) return out;
  max_dim = std::min(max_dim, config.ambient_dim());

  std::set<Flat> spans;
  detail::IndependentSubsets walk(config, detail::all_indices(config.size()),
                                  static_cast<std::size_t>(max_dim + 1));
  walk.run([&](const std::vector<std::size_t>& chosen, const Flat& span) {
    if (chosen.size() >= 2) spans.insert(span);
    return true;
  });
  out.spanned.assign(spans.begin(), spans.end());

  for (const auto& p : config.points()) {
    Flat line = fallback_line(p);
    if (spans.count(line) != 0) continue;
    if (std::find(out.fallback.begin(), out.fallback.end(), line) != out.fallback.end()) {
      continue;
    }
    out.fallback.push_back(std::move(line));
  }
  return out;
}

EssentialDimension essential_dimension(const MultiPointSet& config) {
  if (config.size() == 0) throw Error(ErrorCode::EmptyConfiguration, "no points");
  if (config.ambient_dim() < 1) {
    throw Error(ErrorCode::ParameterError, "essential dimension needs ambient dim >= 1");
  }
  check_size(config);
  const int span_dim = span_of_points(config.points()).dim();
  MinDimensionCover solver(config, build_candidates(config, std::max(1, span_dim)));
  return solver.solve();
}

CoverageResult best_cover(const MultiPointSet& config, int t) {
  if (t <= 0 || config.size() == 0) return {};
  check_size(config);
  MaxWeightCover solver(config, build_candidates(config, t));
  return solver.solve(t);
}

Weight cover_max_points(const MultiPointSet& config, int t) {
  return best_cover(config, t).covered;
}

GProfile g_profile(const MultiPointSet& config, int k) {
  if (k < 0) throw Error(ErrorCode::KOutOfRange, "k must be >= 0");
  GProfile g;
  const auto& m = config.multiplicities();
  g.values.push_back(m.empty() ? 0 : *std::max_element(m.begin(), m.end()));
  for (int i = 1; i <= k; ++i) g.values.push_back(cover_max_points(config, i));
  return g;
}

std::vector<BigInt> beck_lower_profile(const MultiPointSet& config, int k) {
  const auto g = g_profile(config, k);
  std::vector<BigInt> out;
  BigInt acc = 1;
  for (Weight gi : g.values) {
    acc *= static_cast<long>(config.total() - gi);
    out.push_back(acc);
  }
  return out;
}

}  // namespace flatinc
