#include <gtest/gtest.h>

#include <random>
#include <set>

#include "flatinc/constructions.hpp"
#include "flatinc/error.hpp"
#include "flatinc/incidence.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flatinc;
using th::ap;
using th::hp;
using th::q;
using th::span;

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

oracle::Mask mask_of(const std::vector<std::size_t>& idx) {
  oracle::Mask m = 0;
  for (auto i : idx) m |= oracle::Mask{1} << i;
  return m;
}

// inventory as closure-mask -> weight, for comparing with the oracle
std::map<oracle::Mask, long> as_masks(const FlatInventory& inv) {
  std::map<oracle::Mask, long> out;
  for (const auto& e : inv.entries) out.emplace(mask_of(e.points), e.weight);
  return out;
}

PointSet plane4_three_collinear() {
  return th::set(2, {ap({0, 0}), ap({1, 0}), ap({2, 0}), ap({0, 1})});
}

PointSet plane4_general() { return th::set(2, {ap({0, 0}), ap({1, 0}), ap({0, 1}), ap({1, 1})}); }

std::vector<std::pair<std::string, MultiPointSet>> small_configs() {
  return {{"skew4", skew_lines(4)},
          {"skew8", skew_lines(8)},
          {"skew12", skew_lines(12)},
          {"grid32", grid(3, 2)},
          {"grid23", grid(2, 3)},
          {"fpl", flat_plus_line(12, 3, 4).points},
          {"klines", k_lines(12, 3, 5).points},
          {"klines_d3", k_lines(12, 3, 3).points},
          {"gp", random_general_position(7, 3, 2)},
          {"rand", random_configuration(10, 3, 3, 4, 3)},
          {"rand4", random_configuration(9, 4, 2, 9, 2)}};
}

}  // namespace

TEST(Spanned, Examples) {
  EXPECT_EQ(spanned_flats(random_general_position(5, 3, 1), 2).size(), 10U);
  EXPECT_EQ(spanned_flats(th::set(2, {ap({0, 0}), ap({1, 1}), ap({2, 2})}), 1).size(), 1U);
  EXPECT_EQ(spanned_flats(skew_lines(12), 2).size(), 12U);
  EXPECT_EQ(spanned_flats(grid(3, 2), 1).size(), 20U);
  EXPECT_EQ(code_of([] { spanned_flats(grid(3, 2), 3); }), ErrorCode::KOutOfRange);
  EXPECT_EQ(code_of([] { spanned_flats(grid(3, 2), -1); }), ErrorCode::KOutOfRange);
}

TEST(Spanned, MatchesBruteForceOracle) {
  for (const auto& [name, config] : small_configs()) {
    auto p = oracle::from(config);
    for (int k = 0; k <= std::min(3, config.ambient_dim()); ++k) {
      SCOPED_TRACE(name + " k=" + std::to_string(k));
      auto inv = spanned_flats(config, k);
      EXPECT_EQ(as_masks(inv), oracle::spanned(p, k));
      for (const auto& e : inv.entries) {
        EXPECT_EQ(e.flat.dim(), k);
        EXPECT_EQ(e.weight, config.weight_of(e.points));
      }
      EXPECT_TRUE(std::is_sorted(inv.entries.begin(), inv.entries.end(),
                                 [](const auto& a, const auto& b) { return a.flat < b.flat; }));
    }
  }
}

TEST(Spanned, IncrementalAndThreadedAgree) {
  for (const auto& [name, config] : small_configs()) {
    for (int k = 0; k <= std::min(3, config.ambient_dim()); ++k) {
      SCOPED_TRACE(name + " k=" + std::to_string(k));
      auto base = spanned_flats(config, k);
      EXPECT_EQ(spanned_flats_incremental(config, k), base);
      EXPECT_EQ(spanned_flats(config, k, {3}), base);
      EXPECT_EQ(spanned_flats(config, k, {8}), base);
    }
  }
}

TEST(RichProfile, Examples) {
  auto grid_inv = spanned_flats(grid(3, 2), 1);
  auto prof = rich_profile(grid_inv, {0, 2, 3, 4});
  ASSERT_EQ(prof.rows.size(), 4U);
  EXPECT_EQ(prof.rows[0].second, 20U);
  EXPECT_EQ(prof.rows[1].second, 20U);
  EXPECT_EQ(prof.rows[2].second, 8U);
  EXPECT_EQ(prof.rows[3].second, 0U);

  // every plane spanned by the 6+6 skew lines holds one full line plus one
  // point of the other, so all twelve are 7-rich
  auto skew = spanned_flats(skew_lines(12), 2);
  EXPECT_EQ(rich_profile(skew, {7}).rows[0].second, 12U);
  EXPECT_EQ(rich_profile(skew, {8}).rows[0].second, 0U);
  auto p = oracle::from(skew_lines(12));
  std::size_t brute = 0;
  for (auto [m, w] : oracle::spanned(p, 2)) brute += w >= 7;
  EXPECT_EQ(brute, 12U);
}

TEST(RichProfile, Monotone) {
  for (const auto& [name, config] : small_configs()) {
    auto inv = spanned_flats(config, 1);
    std::vector<Weight> rs;
    for (Weight r = 0; r <= config.total() + 1; ++r) rs.push_back(r);
    auto prof = rich_profile(inv, rs);
    for (std::size_t i = 1; i < prof.rows.size(); ++i) {
      EXPECT_LE(prof.rows[i].second, prof.rows[i - 1].second) << name;
    }
  }
}

TEST(MaxSubflat, Examples) {
  auto line_pts = th::set(2, {ap({0, 0}), ap({1, 1}), ap({2, 2})});
  auto line = span({ap({0, 0}), ap({1, 1})});
  auto c = max_subflat_coverage(line_pts, line, {0, 1, 2});
  EXPECT_EQ(c.count, 1);
  EXPECT_EQ(c.flat.dim(), 0);

  auto plane = Flat::whole(2);
  auto c2 = max_subflat_coverage(plane4_three_collinear(), plane, {0, 1, 2, 3});
  EXPECT_EQ(c2.count, 3);
  EXPECT_EQ(c2.flat, span({ap({0, 0}), ap({1, 0})}));

  auto g = grid(3, 2);
  auto c3 = max_subflat_coverage(g, plane, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(c3.count, 3);
  EXPECT_EQ(c3.flat.dim(), 1);

  EXPECT_EQ(code_of([&] { max_subflat_coverage(g, plane, {}); }), ErrorCode::EmptyPointList);
  auto row = span({ap({0, 0}), ap({1, 0})});
  EXPECT_EQ(code_of([&] { max_subflat_coverage(plane4_three_collinear(), row, {0, 1, 3}); }),
            ErrorCode::PreconditionViolated);
}

TEST(Degenerate, Examples) {
  auto plane = Flat::whole(2);
  EXPECT_FALSE(is_alpha_degenerate(plane4_three_collinear(), plane, q("1/2")));
  EXPECT_TRUE(is_alpha_degenerate(grid(3, 2), plane, q("1/2")));
  auto far = span({ap({50, 50}), ap({51, 53})});
  EXPECT_TRUE(is_alpha_degenerate(grid(3, 2), far, q("1/2")));
  EXPECT_EQ(code_of([&] { is_alpha_degenerate(grid(3, 2), plane, q("0")); }),
            ErrorCode::AlphaOutOfRange);
  EXPECT_EQ(code_of([&] { is_essentially_alpha_degenerate(grid(3, 2), plane, q("-1")); }),
            ErrorCode::AlphaOutOfRange);
}

TEST(Degenerate, SkewLinesGap) {
  auto s = skew_lines(12);
  auto whole = Flat::whole(3);
  EXPECT_TRUE(is_alpha_degenerate(s, whole, q("3/4")));
  EXPECT_FALSE(is_essentially_alpha_degenerate(s, whole, q("3/4")));
  EXPECT_EQ(max_subflat_coverage(s, whole, MultiPointSet(s).incident(whole)).count, 7);
}

TEST(Degenerate, GeneralPositionLargeAlpha) {
  // 10 points in general position in P^3: two lines cover at most 4, a plane
  // at most 3, so at alpha = 2/3 the 3-flat is degenerate in both senses
  auto gp = random_general_position(10, 3, 5);
  auto whole = Flat::whole(3);
  EXPECT_TRUE(is_essentially_alpha_degenerate(gp, whole, q("2/3")));
  EXPECT_TRUE(is_alpha_degenerate(gp, whole, q("2/3")));
  auto p = oracle::from(gp);
  EXPECT_EQ(oracle::cover_max(p, 2), 4);
}

TEST(Degenerate, CommonLineNegativeControl) {
  auto fam = planes_through_common_line(8);
  EXPECT_EQ(spanned_flats(fam.points, 2).size(), 0U);
  for (int j = 0; j < 4; ++j) {
    auto plane = fam.plane(j);
    EXPECT_EQ(MultiPointSet(fam.points).incident(plane).size(), 8U);
    EXPECT_FALSE(is_alpha_degenerate(fam.points, plane, q("99/100")));
  }
}

TEST(Degenerate, MatchesOracle) {
  for (const auto& [name, config] : small_configs()) {
    auto p = oracle::from(config);
    for (int k = 1; k <= std::min(3, config.ambient_dim()); ++k) {
      for (const auto& e : spanned_flats(config, k).entries) {
        const auto m = mask_of(e.points);
        for (const char* a : {"1/2", "3/4", "2/3"}) {
          SCOPED_TRACE(name + " k=" + std::to_string(k) + " a=" + a);
          EXPECT_EQ(is_alpha_degenerate(config, e.flat, q(a)),
                    oracle::alpha_degenerate(p, m, k, q(a)));
          if (k <= 2 || e.points.size() <= 8) {
            EXPECT_EQ(is_essentially_alpha_degenerate(config, e.flat, q(a)),
                      oracle::essentially_degenerate(p, m, k, q(a)));
          }
        }
      }
    }
  }
}

TEST(Degenerate, ImplicationOnRandomConfigurations) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto config = random_configuration(8, 3, 3, seed, 2);
    for (int k = 2; k <= 3; ++k) {
      for (const auto& e : spanned_flats(config, k).entries) {
        for (const char* a : {"1/3", "1/2", "3/4", "9/10"}) {
          if (is_essentially_alpha_degenerate(config, e.flat, q(a))) {
            EXPECT_TRUE(is_alpha_degenerate(config, e.flat, q(a))) << seed;
          }
        }
      }
    }
  }
}

TEST(Degenerate, RichDegenerateFlatsAreSpanned) {
  // a rich alpha-degenerate k-flat (alpha < 1) through the points of P must
  // be spanned; check on every span of every subset of incident points
  auto config = random_configuration(9, 3, 3, 3, 1);
  for (int k = 1; k <= 3; ++k) {
    std::set<Flat> spanned;
    for (const auto& e : spanned_flats(config, k).entries) spanned.insert(e.flat);
    for (const auto& e : spanned_flats(config, k).entries) {
      if (is_alpha_degenerate(config, e.flat, q("9/10"))) {
        EXPECT_TRUE(spanned.count(e.flat));
      }
    }
    // a k-flat whose points lie in a (k-1)-flat is never degenerate
    if (k == 0) continue;
    const auto off = hp({0, 1, 3, 7});
    for (const auto& low : spanned_flats(config, k - 1).entries) {
      auto up = join(low.flat, point_flat(off));
      if (up.dim() == k && !spanned.count(up)) {
        EXPECT_FALSE(is_alpha_degenerate(config, up, q("9/10")));
      }
    }
  }
}

TEST(Saturated, Examples) {
  auto plane = Flat::whole(2);
  EXPECT_TRUE(is_gamma_saturated(plane4_general(), plane, q("1/4")));
  auto collinear = th::set(2, {ap({0, 0}), ap({1, 0}), ap({2, 0}), ap({3, 0})});
  EXPECT_FALSE(is_gamma_saturated(collinear, plane, q("1/4")));
  EXPECT_FALSE(is_gamma_saturated(grid(3, 2), plane, q("1/4")));
  EXPECT_TRUE(is_gamma_saturated(grid(3, 2), plane, q("20/81")));
  EXPECT_EQ(code_of([&] { is_gamma_saturated(grid(3, 2), plane, q("0")); }),
            ErrorCode::GammaOutOfRange);
}

TEST(IndependentLists, Examples) {
  EXPECT_EQ(count_independent_lists(th::set(2, {ap({0, 0}), ap({1, 0}), ap({0, 1})}), 1), 6);
  EXPECT_EQ(count_independent_lists(th::set(2, {ap({0, 0}), ap({1, 0}), ap({2, 0})}), 2), 0);
  EXPECT_EQ(count_independent_lists(plane4_general(), 2), 24);
  EXPECT_EQ(count_independent_lists(plane4_general(), 0), 4);
}

TEST(IndependentLists, MatchesOracleWithMultiplicity) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto config = random_configuration(6, 3, 3, seed, 3);
    auto p = oracle::from(config);
    for (int kp = 0; kp <= 3; ++kp) {
      EXPECT_EQ(count_independent_lists(config, kp), oracle::independent_lists(p, kp))
          << seed << " " << kp;
    }
  }
}

TEST(Projection, Examples) {
  auto s = skew_lines(12);
  auto l1 = span({s[0], s[1]});
  auto proj = project_configuration(l1, s);
  EXPECT_EQ(proj.dropped, 6);
  EXPECT_EQ(proj.image.total(), 6);
  EXPECT_EQ(proj.image.size(), 6U);
  EXPECT_EQ(proj.image.ambient_dim(), 1);

  auto inside = project_configuration(Flat::whole(3), s);
  EXPECT_EQ(inside.dropped, 12);
  EXPECT_EQ(inside.image.size(), 0U);

  // (1,1,0) and (1,2,0) lie on a line through the center (1,0,0)
  auto c = point_flat(ap({0, 0}));
  auto two = project_configuration(c, th::set(2, {ap({1, 0}), ap({2, 0}), ap({0, 1})}));
  EXPECT_EQ(two.image.size(), 2U);
  EXPECT_EQ(two.image.total(), 3);
  Weight maxm = 0;
  for (std::size_t i = 0; i < two.image.size(); ++i) maxm = std::max(maxm, two.image.multiplicity(i));
  EXPECT_EQ(maxm, 2);
}

TEST(Projection, MultiplicityMatchesJoinClasses) {
  auto config = random_configuration(10, 3, 3, 21, 2);
  auto center = span({config[0]});
  auto proj = project_configuration(center, config);
  std::map<Flat, Weight> classes;
  Weight dropped = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (contains(center, config[i])) {
      dropped += config.multiplicity(i);
      continue;
    }
    classes[join(center, point_flat(config[i]))] += config.multiplicity(i);
  }
  EXPECT_EQ(proj.dropped, dropped);
  EXPECT_EQ(proj.image.size(), classes.size());
  std::multiset<Weight> a, b;
  for (auto [f, w] : classes) a.insert(w);
  for (auto w : proj.image.multiplicities()) b.insert(w);
  EXPECT_EQ(a, b);
}
