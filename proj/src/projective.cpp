#include "flatinc/projective.hpp"

#include <algorithm>
#include <string>

#include "flatinc/error.hpp"

namespace flatinc {

namespace {

void require_same_ambient(int a, int b, const char* op) {
  if (a != b) {
    throw Error(ErrorCode::MixedAmbient, std::string(op) + ": P^" +
                                             std::to_string(a) + " vs P^" +
                                             std::to_string(b));
  }
}

// Subtracts the pivot components of `v` against an echelon basis; the result
// is zero exactly when v lies in the row space.
Vector reduce_against(const Flat& f, Vector v) {
  const auto& rows = f.basis();
  const auto& piv = f.pivots();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (v[piv[i]] == 0) continue;
    Scalar c = v[piv[i]];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (rows[i][j] != 0) v[j] -= c * rows[i][j];
    }
  }
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

// Basis of {x : A x = 0} for an echelon matrix over `cols` columns.
Matrix null_space(const Matrix& echelon, const std::vector<std::size_t>& piv,
                  std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  Matrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols, Scalar(0));
    x[free] = 1;
    for (std::size_t i = 0; i < echelon.size(); ++i) x[piv[i]] = -echelon[i][free];
    out.push_back(std::move(x));
  }
  return out;
}

std::strong_ordering compare_vectors(const Vector& a, const Vector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

}  // namespace

std::vector<std::size_t> reduce_rows(Matrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    if (rows[r][c] != 1) {
      Scalar inv = 1 / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Scalar factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= factor * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank_of(Matrix rows) { return reduce_rows(rows).size(); }

Point Point::canonicalize(Vector raw) {
  auto lead = std::find_if(raw.begin(), raw.end(),
                           [](const Scalar& s) { return s != 0; });
  if (lead == raw.end()) throw Error(ErrorCode::ZeroVector, "all coordinates are 0");
  if (*lead != 1) {
    Scalar inv = 1 / *lead;
    for (auto it = lead; it != raw.end(); ++it) *it *= inv;
  }
  return Point(std::move(raw));
}

Point Point::embed_affine(std::span<const Scalar> affine) {
  Vector v;
  v.reserve(affine.size() + 1);
  v.emplace_back(1);
  v.insert(v.end(), affine.begin(), affine.end());
  return Point(std::move(v));
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  return compare_vectors(a.coords_, b.coords_);
}

Flat Flat::empty(int ambient_dim) { return Flat(ambient_dim, {}, {}); }

Flat Flat::whole(int ambient_dim) {
  Matrix id(ambient_dim + 1, Vector(ambient_dim + 1, Scalar(0)));
  for (int i = 0; i <= ambient_dim; ++i) id[i][i] = 1;
  return from_rows(ambient_dim, std::move(id));
}

Flat Flat::from_rows(int ambient_dim, Matrix rows) {
  auto pivots = reduce_rows(rows);
  return Flat(ambient_dim, std::move(rows), std::move(pivots));
}

std::strong_ordering operator<=>(const Flat& a, const Flat& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  const std::size_t n = std::min(a.basis_.size(), b.basis_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare_vectors(a.basis_[i], b.basis_[i]); c != 0) return c;
  }
  return a.basis_.size() <=> b.basis_.size();
}

Flat span_of_points(std::span<const Point> pts, int ambient_dim) {
  Matrix rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    require_same_ambient(ambient_dim, p.ambient_dim(), "span_of_points");
    rows.push_back(p.coords());
  }
  return Flat::from_rows(ambient_dim, std::move(rows));
}

Flat span_of_points(std::span<const Point> pts) {
  if (pts.empty()) {
    throw Error(ErrorCode::EmptyPointList,
                "span of an empty list needs an explicit ambient dimension");
  }
  return span_of_points(pts, pts.front().ambient_dim());
}

Flat point_flat(const Point& p) {
  return Flat::from_rows(p.ambient_dim(), {p.coords()});
}

Flat join(const Flat& a, const Flat& b) {
  require_same_ambient(a.ambient_dim(), b.ambient_dim(), "join");
  if (b.is_empty()) return a;
  if (a.is_empty()) return b;
  Matrix rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Flat::from_rows(a.ambient_dim(), std::move(rows));
}

Flat join_all(std::span<const Flat> flats, int ambient_dim) {
  Matrix rows;
  for (const auto& f : flats) {
    require_same_ambient(ambient_dim, f.ambient_dim(), "join");
    rows.insert(rows.end(), f.basis().begin(), f.basis().end());
  }
  return Flat::from_rows(ambient_dim, std::move(rows));
}

Flat meet(const Flat& a, const Flat& b) {
  require_same_ambient(a.ambient_dim(), b.ambient_dim(), "meet");
  const auto cols = static_cast<std::size_t>(a.ambient_dim() + 1);
  // Row spaces intersect in the annihilator of the sum of annihilators.
  Matrix ann = null_space(a.basis(), a.pivots(), cols);
  Matrix ann_b = null_space(b.basis(), b.pivots(), cols);
  ann.insert(ann.end(), ann_b.begin(), ann_b.end());
  auto piv = reduce_rows(ann);
  return Flat::from_rows(a.ambient_dim(), null_space(ann, piv, cols));
}

bool contains(const Flat& f, const Point& p) {
  require_same_ambient(f.ambient_dim(), p.ambient_dim(), "contains");
  if (f.is_empty()) return false;
  return is_zero(reduce_against(f, p.coords()));
}

bool is_subflat(const Flat& inner, const Flat& outer) {
  require_same_ambient(inner.ambient_dim(), outer.ambient_dim(), "is_subflat");
  return std::all_of(inner.basis().begin(), inner.basis().end(),
                     [&](const Vector& row) {
                       return is_zero(reduce_against(outer, row));
                     });
}

Point project_from(const Flat& center, const Point& p) {
  require_same_ambient(center.ambient_dim(), p.ambient_dim(), "project_from");
  Vector residual = reduce_against(center, p.coords());
  std::vector<bool> is_pivot(residual.size(), false);
  for (auto c : center.pivots()) is_pivot[c] = true;
  Vector image;
  image.reserve(residual.size() - center.pivots().size());
  for (std::size_t j = 0; j < residual.size(); ++j) {
    if (!is_pivot[j]) image.push_back(std::move(residual[j]));
  }
  if (is_zero(image)) {
    throw Error(ErrorCode::PointInCenter, "point lies in the projection center");
  }
  return Point::canonicalize(std::move(image));
}

}  // namespace flatinc
