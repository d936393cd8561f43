#include <gtest/gtest.h>

#include "flatinc/constructions.hpp"
#include "flatinc/error.hpp"
#include "flatinc/essential.hpp"
#include "flatinc/incidence.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flatinc;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvariantViolated;
}

Weight max_richness(const FlatInventory& inv) {
  Weight best = 0;
  for (const auto& e : inv.entries) best = std::max(best, e.weight);
  return best;
}

}  // namespace

TEST(Grid, Examples) {
  EXPECT_EQ(grid(3, 2).size(), 9U);
  EXPECT_EQ(grid(1, 2).size(), 1U);
  EXPECT_EQ(spanned_flats(grid(3, 2), 1).size(), 20U);
  auto cube = grid(2, 3);
  EXPECT_EQ(cube.size(), 8U);
  // 6 faces and 6 diagonal planes through opposite edges, plus 8 corner triangles
  const auto planes = spanned_flats(cube, 2).size();
  EXPECT_EQ(planes, oracle::spanned(oracle::from(cube), 2).size());
  EXPECT_EQ(planes, 20U);
  EXPECT_EQ(code_of([] { grid(17, 3); }), ErrorCode::SizeOverflow);
  EXPECT_EQ(code_of([] { grid(0, 2); }), ErrorCode::ParameterConflict);
  EXPECT_EQ(code_of([] { grid(3, 1); }), ErrorCode::ParameterConflict);
  EXPECT_EQ(grid(4, 6).size(), 4096U);
}

TEST(SkewLines, Examples) {
  for (int n : {4, 8, 12, 16}) {
    auto s = skew_lines(n);
    EXPECT_EQ(s.size(), static_cast<std::size_t>(n));
    auto inv = spanned_flats(s, 2);
    EXPECT_EQ(inv.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(max_richness(inv), n / 2 + 1);
  }
  EXPECT_EQ(code_of([] { skew_lines(7); }), ErrorCode::OddN);
  EXPECT_EQ(code_of([] { skew_lines(2); }), ErrorCode::ParameterConflict);
}

TEST(FlatPlusLine, Examples) {
  auto fpl = flat_plus_line(12, 3, 4);
  EXPECT_EQ(fpl.flat.dim(), 2);
  EXPECT_EQ(fpl.line.dim(), 1);
  EXPECT_TRUE(meet(fpl.flat, fpl.line).is_empty());
  auto inv = spanned_flats(fpl.points, 3);
  EXPECT_LE(inv.size(), 21U);
  EXPECT_EQ(inv.size(), oracle::spanned(oracle::from(fpl.points), 3).size());
  for (const auto& e : inv.entries) {
    EXPECT_TRUE(is_subflat(fpl.flat, e.flat) || is_subflat(fpl.line, e.flat));
  }
  // points on the (k-1)-flat are in general position inside it: no three collinear
  MultiPointSet m(fpl.points);
  auto on_flat = m.subset(m.incident(fpl.flat));
  EXPECT_EQ(on_flat.size(), 6U);
  EXPECT_EQ(spanned_flats(on_flat, 1).size(), 15U);

  // k = 2 gives two skew lines
  auto small = flat_plus_line(8, 2, 3);
  EXPECT_EQ(spanned_flats(small.points, 2).size(), 8U);
  EXPECT_EQ(max_richness(spanned_flats(small.points, 2)), 5);
  EXPECT_EQ(code_of([] { flat_plus_line(12, 3, 3); }), ErrorCode::ParameterConflict);
  EXPECT_EQ(code_of([] { flat_plus_line(11, 3, 4); }), ErrorCode::OddN);
}

TEST(KLines, Examples) {
  auto kl = k_lines(12, 3, 5);
  ASSERT_EQ(kl.lines.size(), 3U);
  MultiPointSet m(kl.points);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(m.incident(kl.lines[i]).size(), 4U);
    for (std::size_t j = i + 1; j < 3; ++j) {
      auto pair = join(kl.lines[i], kl.lines[j]);
      EXPECT_EQ(pair.dim(), 3);
      EXPECT_EQ(m.incident(pair).size(), 8U);
    }
  }
  EXPECT_GE(max_richness(spanned_flats(m, 3)), 8);

  // in P^3 the pair spans everything
  auto low = k_lines(12, 3, 3);
  MultiPointSet ml(low.points);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      EXPECT_TRUE(meet(low.lines[i], low.lines[j]).is_empty());
      EXPECT_EQ(ml.incident(join(low.lines[i], low.lines[j])).size(), 12U);
    }
  }
  EXPECT_GE(max_richness(spanned_flats(ml, 3)), 8);

  auto two = k_lines(8, 2, 3);
  EXPECT_EQ(spanned_flats(two.points, 2).size(), 8U);
  EXPECT_EQ(code_of([] { k_lines(10, 3, 5); }), ErrorCode::DivisibilityError);
}

TEST(CommonLine, Examples) {
  auto fam = planes_through_common_line(8);
  MultiPointSet m(fam.points);
  EXPECT_EQ(spanned_flats(m, 2).size(), 0U);
  EXPECT_EQ(spanned_flats(m, 1).size(), 1U);
  for (int j = 0; j < 5; ++j) {
    EXPECT_EQ(fam.plane(j).dim(), 2);
    EXPECT_EQ(m.incident(fam.plane(j)).size(), 8U);
    for (int i = 0; i < j; ++i) EXPECT_NE(fam.plane(i), fam.plane(j));
  }
}

TEST(RandomGeneralPosition, Examples) {
  auto a = random_general_position(6, 3, 1);
  EXPECT_EQ(a, random_general_position(6, 3, 1));
  EXPECT_EQ(spanned_flats(a, 2).size(), 20U);
  EXPECT_EQ(spanned_flats(a, 3).size(), 1U);
  EXPECT_EQ(spanned_flats(random_general_position(5, 2, 9), 1).size(), 10U);
  auto b = random_general_position(9, 3, 2);
  EXPECT_EQ(g_profile(b, 1).values[1], 2);
  EXPECT_EQ(essential_dimension(b).K, oracle::essential_dimension(oracle::from(b)));
}

TEST(RandomConfiguration, DeterministicAndValid) {
  auto a = random_configuration(10, 3, 3, 4, 3);
  EXPECT_EQ(a, random_configuration(10, 3, 3, 4, 3));
  EXPECT_NE(a, random_configuration(10, 3, 3, 5, 3));
  EXPECT_EQ(a.size(), 10U);
  for (auto w : a.multiplicities()) {
    EXPECT_GE(w, 1);
    EXPECT_LE(w, 3);
  }
  EXPECT_EQ(code_of([] { random_configuration(10, 2, 3, 1); }), ErrorCode::ParameterConflict);
}

TEST(BuildConstruction, ByName) {
  EXPECT_EQ(build_construction({"skew_lines", {{"n", 8}}}), MultiPointSet(skew_lines(8)));
  EXPECT_EQ(build_construction({"grid", {}}), MultiPointSet(grid(3, 2)));
  EXPECT_EQ(build_construction({"k_lines", {{"n", 12}, {"k", 3}}}),
            MultiPointSet(k_lines(12, 3, 5).points));
  EXPECT_EQ(code_of([] { build_construction({"nope", {}}); }), ErrorCode::ParameterError);
}
