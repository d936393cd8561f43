#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "flatinc/configuration.hpp"

namespace flatinc::detail {

// Depth-first walk over index subsets of `pool` whose points are affinely
// independent, visiting each such subset once (ascending positions). The
// visitor receives the chosen positions into `pool` and their span; returning
// false stops descent below that subset.
class IndependentSubsets {
 public:
  using Visitor = std::function<bool(const std::vector<std::size_t>&, const Flat&)>;

  IndependentSubsets(const MultiPointSet& config, std::vector<std::size_t> pool,
                     std::size_t max_size)
      : config_(config), pool_(std::move(pool)), max_size_(max_size) {}

  void run(const Visitor& visit, std::size_t first_lo = 0, std::size_t first_step = 1) {
    chosen_.clear();
    Flat none = Flat::empty(config_.ambient_dim());
    for (std::size_t i = first_lo; i < pool_.size(); i += first_step) {
      extend(i, none, visit);
    }
  }

 private:
  void extend(std::size_t pos, const Flat& current, const Visitor& visit) {
    const Point& p = config_[pool_[pos]];
    if (contains(current, p)) return;
    Flat next = join(current, point_flat(p));
    chosen_.push_back(pos);
    if (visit(chosen_, next) && chosen_.size() < max_size_) {
      for (std::size_t j = pos + 1; j < pool_.size(); ++j) extend(j, next, visit);
    }
    chosen_.pop_back();
  }

  const MultiPointSet& config_;
  std::vector<std::size_t> pool_;
  std::size_t max_size_;
  std::vector<std::size_t> chosen_;
};

inline std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace flatinc::detail
