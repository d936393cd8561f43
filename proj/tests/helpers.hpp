#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "flatinc/configuration.hpp"
#include "flatinc/projective.hpp"
#include "flatinc/scalar.hpp"

namespace th {

inline flatinc::Scalar q(const std::string& s) { return flatinc::parse_rational(s).value(); }

inline flatinc::Point hp(std::initializer_list<long> c) {
  flatinc::Vector v;
  for (long x : c) v.emplace_back(x);
  return flatinc::Point::canonicalize(v);
}

inline flatinc::Point ap(std::initializer_list<long> c) {
  flatinc::Vector v;
  for (long x : c) v.emplace_back(x);
  return flatinc::Point::embed_affine(v);
}

inline flatinc::Flat span(std::initializer_list<flatinc::Point> pts) {
  std::vector<flatinc::Point> v(pts);
  return flatinc::span_of_points(v);
}

inline flatinc::PointSet set(int d, std::initializer_list<flatinc::Point> pts) {
  return flatinc::PointSet(d, std::vector<flatinc::Point>(pts));
}

}  // namespace th
