#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "flatinc/projective.hpp"

namespace flatinc {

using Weight = std::int64_t;

/// Finite set of distinct points sharing one ambient space.
class PointSet {
 public:
  PointSet(int ambient_dim, std::vector<Point> points);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int ambient_dim_;
  std::vector<Point> points_;
};

/// Distinct points with positive integer multiplicities. Every engine
/// operation accepts this type; a PointSet converts to it with unit weights.
class MultiPointSet {
 public:
  MultiPointSet(int ambient_dim, std::vector<Point> points,
                std::vector<Weight> multiplicities);
  MultiPointSet(const PointSet& set);  // NOLINT: implicit by intent

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<Weight>& multiplicities() const { return mult_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  Weight multiplicity(std::size_t i) const { return mult_[i]; }
  Weight total() const { return total_; }
  bool is_plain() const;

  /// Sum of multiplicities over `indices`.
  Weight weight_of(std::span<const std::size_t> indices) const;
  /// Indices of points lying in `f`, ascending.
  std::vector<std::size_t> incident(const Flat& f) const;
  /// Sub-configuration restricted to `indices` (order kept).
  MultiPointSet subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const MultiPointSet&, const MultiPointSet&) = default;

 private:
  int ambient_dim_;
  std::vector<Point> points_;
  std::vector<Weight> mult_;
  Weight total_ = 0;
};

}  // namespace flatinc
