#pragma once

// Exact projective geometry over the rationals.
//
// A point of P^d is stored as its d+1 homogeneous coordinates scaled so the
// first nonzero entry is 1. A flat is stored as the reduced row echelon form
// of any basis of its homogeneous subspace, which is unique, so structural
// equality of Flat values is geometric equality. The empty flat has no rows
// and dimension -1.

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "flatinc/scalar.hpp"

namespace flatinc {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

class Point {
 public:
  /// Scales `raw` so its first nonzero coordinate is 1. Throws ZeroVector.
  static Point canonicalize(Vector raw);

  /// (x_1..x_d) -> (1, x_1..x_d).
  static Point embed_affine(std::span<const Scalar> affine);

  int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }
  const Vector& coords() const { return coords_; }
  bool is_finite() const { return coords_.front() != 0; }

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  explicit Point(Vector coords) : coords_(std::move(coords)) {}
  Vector coords_;
};

class Flat {
 public:
  /// The empty flat (dimension -1) of P^d.
  static Flat empty(int ambient_dim);
  /// All of P^d.
  static Flat whole(int ambient_dim);
  /// Row space of `rows` (any spanning set, zero rows allowed).
  static Flat from_rows(int ambient_dim, Matrix rows);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()) - 1; }
  bool is_empty() const { return basis_.empty(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const Flat& a, const Flat& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }
  /// Lexicographic on the canonical basis rows; used for tie-breaking and
  /// for the canonical ordering of every inventory.
  friend std::strong_ordering operator<=>(const Flat& a, const Flat& b);

 private:
  Flat(int ambient_dim, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_dim_(ambient_dim),
        basis_(std::move(basis)),
        pivots_(std::move(pivots)) {}

  int ambient_dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// In-place reduced row echelon form; zero rows are removed. Returns the
/// pivot column of each remaining row.
std::vector<std::size_t> reduce_rows(Matrix& rows);

/// Rank of a set of homogeneous vectors.
std::size_t rank_of(Matrix rows);

Flat span_of_points(std::span<const Point> pts);
Flat span_of_points(std::span<const Point> pts, int ambient_dim);
Flat join(const Flat& a, const Flat& b);
Flat join_all(std::span<const Flat> flats, int ambient_dim);
Flat meet(const Flat& a, const Flat& b);
bool contains(const Flat& f, const Point& p);
/// True when every basis vector of `inner` lies in `outer`.
bool is_subflat(const Flat& inner, const Flat& outer);
Flat point_flat(const Point& p);

/// Projection from `center` onto the coordinate flat spanned by the columns
/// that are not pivots of `center`'s canonical basis. The image lives in
/// P^(d - dim(center) - 1). Throws PointInCenter if p lies in `center`.
Point project_from(const Flat& center, const Point& p);

}  // namespace flatinc
