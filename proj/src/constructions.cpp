#include "flatinc/constructions.hpp"

#include <random>
#include <set>
#include <string>

#include "flatinc/error.hpp"

namespace flatinc {

namespace {

Point homogeneous(std::vector<long> coords) {
  Vector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return Point::canonicalize(std::move(v));
}

Flat flat_of(int d, const std::vector<std::vector<long>>& rows) {
  Matrix m;
  for (const auto& r : rows) {
    Vector v;
    for (long c : r) v.emplace_back(c);
    m.push_back(std::move(v));
  }
  return Flat::from_rows(d, std::move(m));
}

std::vector<long> unit(int d, int index) {
  std::vector<long> v(static_cast<std::size_t>(d + 1), 0);
  v[static_cast<std::size_t>(index)] = 1;
  return v;
}

// Uniform in [lo, hi] without relying on std::uniform_int_distribution, whose
// output differs between standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

std::int64_t param(const ConstructionSpec& spec, const std::string& key,
                   std::int64_t fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

PointSet grid(int m, int d) {
  if (m < 1 || d < 2) throw Error(ErrorCode::ParameterConflict, "grid needs m >= 1, d >= 2");
  std::size_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= static_cast<std::size_t>(m);
    if (count > kMaxGridPoints) {
      throw Error(ErrorCode::SizeOverflow, "grid exceeds " +
                                               std::to_string(kMaxGridPoints) + " points");
    }
  }
  std::vector<Point> pts;
  std::vector<long> digits(static_cast<std::size_t>(d), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (int j = d - 1; j >= 0; --j) {
      digits[static_cast<std::size_t>(j)] = static_cast<long>(rest % static_cast<std::size_t>(m));
      rest /= static_cast<std::size_t>(m);
    }
    std::vector<long> h{1};
    h.insert(h.end(), digits.begin(), digits.end());
    pts.push_back(homogeneous(std::move(h)));
  }
  return PointSet(d, std::move(pts));
}

PointSet skew_lines(int n) {
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "n=" + std::to_string(n) + " is odd");
  if (n < 4) throw Error(ErrorCode::ParameterConflict, "skew_lines needs n >= 4");
  std::vector<Point> pts;
  for (long t = 1; t <= n / 2; ++t) pts.push_back(homogeneous({1, t, 0, 0}));
  for (long t = 1; t <= n / 2; ++t) pts.push_back(homogeneous({1, 0, t, 1}));
  return PointSet(3, std::move(pts));
}

FlatPlusLine flat_plus_line(int n, int k, int d) {
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "n=" + std::to_string(n) + " is odd");
  if (k < 2 || d < k + 1) {
    throw Error(ErrorCode::ParameterConflict, "flat_plus_line needs k >= 2 and d >= k+1");
  }
  const int half = n / 2;
  if (half < k || half < 2) {
    throw Error(ErrorCode::ParameterConflict,
                "need n/2 >= k points to span the (k-1)-flat and >= 2 on the line");
  }
  std::vector<Point> pts;
  for (long t = 1; t <= half; ++t) {
    std::vector<long> h(static_cast<std::size_t>(d + 1), 0);
    h[0] = 1;
    long power = 1;
    for (int j = 1; j <= k - 1; ++j) {
      power *= t;
      h[static_cast<std::size_t>(j)] = power;
    }
    pts.push_back(homogeneous(std::move(h)));
  }
  for (long s = 1; s <= half; ++s) {
    std::vector<long> h(static_cast<std::size_t>(d + 1), 0);
    h[0] = 1;
    h[static_cast<std::size_t>(k)] = s;
    h[static_cast<std::size_t>(k + 1)] = 1;
    pts.push_back(homogeneous(std::move(h)));
  }

  std::vector<std::vector<long>> flat_rows;
  for (int j = 0; j < k; ++j) flat_rows.push_back(unit(d, j));
  auto base = unit(d, 0);
  base[static_cast<std::size_t>(k + 1)] = 1;
  return {PointSet(d, std::move(pts)), flat_of(d, flat_rows),
          flat_of(d, {base, unit(d, k)})};
}

KLines k_lines(int n, int k, int d) {
  if (k < 1 || n % k != 0) {
    throw Error(ErrorCode::DivisibilityError,
                "k=" + std::to_string(k) + " must divide n=" + std::to_string(n));
  }
  const int per_line = n / k;
  if (per_line < 2) throw Error(ErrorCode::ParameterConflict, "need >= 2 points per line");
  if (k >= 2 && d < 3) {
    throw Error(ErrorCode::ParameterConflict, "pairwise skew lines need d >= 3");
  }
  if (d < 1) throw Error(ErrorCode::ParameterConflict, "d must be >= 1");

  KLines out{PointSet(d, {}), {}};
  std::vector<Point> pts;
  const bool independent = d >= 2 * k - 1;
  for (int i = 0; i < k; ++i) {
    std::vector<long> base(static_cast<std::size_t>(d + 1), 0), dir(base);
    base[0] = 1;
    if (independent) {
      if (i == 0) {
        dir[1] = 1;
      } else {
        base[static_cast<std::size_t>(2 * i)] = 1;
        dir[static_cast<std::size_t>(2 * i + 1)] = 1;
      }
    } else {
      base[1] = i;
      dir[2] = 1;
      dir[3] = i;
    }
    for (long t = 1; t <= per_line; ++t) {
      std::vector<long> h(base);
      for (std::size_t j = 0; j < h.size(); ++j) h[j] += t * dir[j];
      pts.push_back(homogeneous(std::move(h)));
    }
    out.lines.push_back(flat_of(d, {base, dir}));
  }
  out.points = PointSet(d, std::move(pts));
  return out;
}

Flat CommonLineFamily::plane(int j) const {
  return join(line, point_flat(homogeneous({0, 0, 1, j})));
}

CommonLineFamily planes_through_common_line(int n) {
  if (n < 2) throw Error(ErrorCode::ParameterConflict, "need n >= 2");
  std::vector<Point> pts;
  for (long t = 1; t <= n; ++t) pts.push_back(homogeneous({1, t, 0, 0}));
  return {PointSet(3, std::move(pts)), flat_of(3, {unit(3, 0), unit(3, 1)})};
}

PointSet random_general_position(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 1) throw Error(ErrorCode::ParameterConflict, "need n >= 0, d >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  int rejected = 0;
  while (static_cast<int>(pts.size()) < n) {
    std::vector<long> h{1};
    for (int j = 0; j < d; ++j) h.push_back(draw(rng, -16, 16));
    Point cand = homogeneous(std::move(h));

    // Every subset of size min(d, m) of the accepted points, plus the
    // candidate, must be independent.
    const std::size_t m = pts.size();
    const std::size_t s = std::min<std::size_t>(static_cast<std::size_t>(d), m);
    bool ok = true;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (ok) {
      Matrix rows;
      for (auto i : idx) rows.push_back(pts[i].coords());
      rows.push_back(cand.coords());
      if (rank_of(rows) != s + 1) ok = false;
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == m - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (ok) {
      pts.push_back(std::move(cand));
    } else if (++rejected > 100000) {
      throw Error(ErrorCode::RetryLimit, "general position sampling gave up");
    }
  }
  return PointSet(d, std::move(pts));
}

MultiPointSet random_configuration(int n, int d, int box, std::uint64_t seed,
                                   Weight max_mult) {
  if (n < 0 || d < 1 || box < 1 || max_mult < 1) {
    throw Error(ErrorCode::ParameterConflict, "invalid random configuration parameters");
  }
  double capacity = 1;
  for (int j = 0; j < d; ++j) capacity *= box;
  if (capacity < n) {
    throw Error(ErrorCode::ParameterConflict, "box too small for n distinct points");
  }
  std::mt19937_64 rng(seed);
  std::set<Point> seen;
  std::vector<Point> pts;
  std::vector<Weight> mult;
  while (static_cast<int>(pts.size()) < n) {
    std::vector<long> h{1};
    for (int j = 0; j < d; ++j) h.push_back(draw(rng, 0, box - 1));
    Point p = homogeneous(std::move(h));
    if (!seen.insert(p).second) continue;
    pts.push_back(std::move(p));
    mult.push_back(draw(rng, 1, max_mult));
  }
  return MultiPointSet(d, std::move(pts), std::move(mult));
}

MultiPointSet build_construction(const ConstructionSpec& spec) {
  const auto& name = spec.name;
  auto p = [&](const char* key, std::int64_t fallback) {
    return static_cast<int>(param(spec, key, fallback));
  };
  if (name == "grid") return grid(p("m", 3), p("d", 2));
  if (name == "skew_lines") return skew_lines(p("n", 12));
  if (name == "flat_plus_line") {
    const int k = p("k", 3);
    return flat_plus_line(p("n", 12), k, p("d", k + 1)).points;
  }
  if (name == "k_lines") {
    const int k = p("k", 3);
    return k_lines(p("n", 12), k, p("d", 2 * k - 1)).points;
  }
  if (name == "common_line") return planes_through_common_line(p("n", 8)).points;
  if (name == "random_gp") {
    return random_general_position(p("n", 8), p("d", 3),
                                   static_cast<std::uint64_t>(param(spec, "seed", 1)));
  }
  if (name == "random") {
    return random_configuration(p("n", 10), p("d", 2), p("box", 3),
                                static_cast<std::uint64_t>(param(spec, "seed", 1)),
                                param(spec, "mult", 1));
  }
  throw Error(ErrorCode::ParameterError, "unknown construction '" + name + "'");
}

}  // namespace flatinc
