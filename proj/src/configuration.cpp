#include "flatinc/configuration.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "flatinc/error.hpp"

namespace flatinc {

namespace {

void check_points(int ambient_dim, const std::vector<Point>& points) {
  std::set<Point> seen;
  for (const auto& p : points) {
    if (p.ambient_dim() != ambient_dim) {
      throw Error(ErrorCode::MixedAmbient,
                  "point in P^" + std::to_string(p.ambient_dim()) +
                      " added to a configuration in P^" + std::to_string(ambient_dim));
    }
    if (!seen.insert(p).second) {
      throw Error(ErrorCode::ParameterError, "duplicate point in configuration");
    }
  }
}

}  // namespace

PointSet::PointSet(int ambient_dim, std::vector<Point> points)
    : ambient_dim_(ambient_dim), points_(std::move(points)) {
  check_points(ambient_dim_, points_);
}

MultiPointSet::MultiPointSet(int ambient_dim, std::vector<Point> points,
                             std::vector<Weight> multiplicities)
    : ambient_dim_(ambient_dim),
      points_(std::move(points)),
      mult_(std::move(multiplicities)) {
  check_points(ambient_dim_, points_);
  if (mult_.size() != points_.size()) {
    throw Error(ErrorCode::ParameterError, "one multiplicity per point required");
  }
  for (auto m : mult_) {
    if (m < 1) throw Error(ErrorCode::ParameterError, "multiplicity must be >= 1");
    total_ += m;
  }
}

MultiPointSet::MultiPointSet(const PointSet& set)
    : ambient_dim_(set.ambient_dim()),
      points_(set.points()),
      mult_(set.size(), 1),
      total_(static_cast<Weight>(set.size())) {}

bool MultiPointSet::is_plain() const {
  return std::all_of(mult_.begin(), mult_.end(), [](Weight m) { return m == 1; });
}

Weight MultiPointSet::weight_of(std::span<const std::size_t> indices) const {
  Weight w = 0;
  for (auto i : indices) w += mult_[i];
  return w;
}

std::vector<std::size_t> MultiPointSet::incident(const Flat& f) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (contains(f, points_[i])) out.push_back(i);
  }
  return out;
}

MultiPointSet MultiPointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<Point> pts;
  std::vector<Weight> mult;
  for (auto i : indices) {
    pts.push_back(points_[i]);
    mult.push_back(mult_[i]);
  }
  return MultiPointSet(ambient_dim_, std::move(pts), std::move(mult));
}

}  // namespace flatinc
