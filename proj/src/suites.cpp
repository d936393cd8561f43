#include "flatinc/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "flatinc/config_io.hpp"
#include "flatinc/constructions.hpp"
#include "flatinc/error.hpp"
#include "flatinc/essential.hpp"
#include "flatinc/incidence.hpp"
#include "flatinc/procedures.hpp"

namespace flatinc {

using nlohmann::json;

namespace {

json config_json(const MultiPointSet& config) {
  return json::parse(serialize_config(config));
}

std::string str(const Scalar& q) { return format_rational(q); }
std::string str(const BigInt& z) { return z.get_str(); }

BigInt binomial(long n, long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Flat random_flat(std::mt19937_64& rng, int d) {
  const int gens = static_cast<int>(rng() % static_cast<std::uint64_t>(d + 2));
  Matrix rows;
  for (int g = 0; g < gens; ++g) {
    Vector v;
    for (int j = 0; j <= d; ++j) v.emplace_back(static_cast<long>(rng() % 3) - 1);
    rows.push_back(std::move(v));
  }
  return Flat::from_rows(d, std::move(rows));
}

}  // namespace

SuiteReport verify_dim_identities(std::uint64_t seed, std::size_t pair_trials,
                                  std::size_t family_trials) {
  constexpr int d = 4;
  SuiteReport report;
  report.suite = "dim_identities";
  std::mt19937_64 rng(seed);
  std::size_t disjoint = 0;
  for (std::size_t t = 0; t < pair_trials; ++t) {
    Flat a = random_flat(rng, d), b = random_flat(rng, d);
    const int j = join(a, b).dim(), m = meet(a, b).dim();
    if (m == -1) ++disjoint;
    report.check(j + m == a.dim() + b.dim(), "dim(join) + dim(meet) != dim(a) + dim(b)",
                 {{"seed", seed}, {"trial", t}, {"a", flat_json(a)}, {"b", flat_json(b)},
                  {"join_dim", j}, {"meet_dim", m}});
  }
  for (std::size_t t = 0; t < family_trials; ++t) {
    const int size = 1 + static_cast<int>(rng() % 4);
    std::vector<Flat> family;
    int bound = size - 1;
    json flats = json::array();
    for (int i = 0; i < size; ++i) {
      family.push_back(random_flat(rng, d));
      bound += family.back().dim();
      flats.push_back(flat_json(family.back()));
    }
    const int j = join_all(family, d).dim();
    report.check(j <= bound, "dim(join(H)) > |H| - 1 + sum dim",
                 {{"seed", seed}, {"family_trial", t}, {"flats", flats},
                  {"join_dim", j}, {"bound", bound}});
  }
  report.witnesses = {{"pairs", pair_trials},
                      {"families", family_trials},
                      {"disjoint_pairs", disjoint}};
  return report;
}

namespace {

struct Lemma8Tally {
  std::size_t count = 0;
  std::size_t inner_checks = 0;
};

// One (config, k, alpha) sweep over r. The inventory and degeneracy flags are
// shared across r, and the ordered-list counts are cached per flat.
void lemma8_sweep(SuiteReport& report, const MultiPointSet& config, const FlatInventory& inv,
                  int k, const Scalar& alpha, const std::vector<Weight>& r_values,
                  const json& context, std::vector<Lemma8Tally>& tallies) {
  const Scalar one_minus = 1 - alpha;
  const Weight n = config.total();
  std::vector<bool> degenerate;
  for (const auto& e : inv.entries) degenerate.push_back(is_alpha_degenerate(config, e.flat, alpha));
  std::map<std::size_t, std::vector<BigInt>> lists;
  for (Weight r : r_values) {
    Lemma8Tally tally;
    for (std::size_t i = 0; i < inv.entries.size(); ++i) {
      const auto& e = inv.entries[i];
      if (e.weight < r || !degenerate[i]) continue;
      ++tally.count;
      auto it = lists.find(i);
      if (it == lists.end()) {
        std::vector<BigInt> row;
        const auto sub = config.subset(e.points);
        for (int kp = 0; kp <= k; ++kp) row.push_back(count_independent_lists(sub, kp));
        it = lists.emplace(i, std::move(row)).first;
      }
      for (int kp = 0; kp <= k; ++kp) {
        ++tally.inner_checks;
        const BigInt& got = it->second[static_cast<std::size_t>(kp)];
        const Scalar floor = pow(one_minus, static_cast<unsigned>(kp)) *
                             pow(Scalar(r), static_cast<unsigned>(kp + 1));
        if (Scalar(got) >= floor) {
          ++report.cases;
          continue;
        }
        json params = context;
        params.update({{"k", k}, {"r", r}, {"alpha", str(alpha)}, {"flat", flat_json(e.flat)},
                       {"k_prime", kp}, {"lists", str(got)}, {"floor", str(floor)},
                       {"config", config_json(config)}});
        report.check(false, "independent ordered lists below (1-alpha)^k' r^(k'+1)", params);
      }
    }
    const Scalar bound = pow(Scalar(n), static_cast<unsigned>(k + 1)) /
                         (pow(one_minus, static_cast<unsigned>(k)) *
                          pow(Scalar(r), static_cast<unsigned>(k + 1)));
    json params = context;
    params.update({{"k", k}, {"r", r}, {"alpha", str(alpha)}, {"count", tally.count},
                   {"bound", str(bound)}});
    if (Scalar(static_cast<long>(tally.count)) > bound) params["config"] = config_json(config);
    report.check(Scalar(static_cast<long>(tally.count)) <= bound,
                 "rich degenerate flat count exceeds (1-alpha)^-k n^(k+1) r^-(k+1)", params);
    tallies.push_back(tally);
  }
}

}  // namespace

SuiteReport verify_lemma8(const MultiPointSet& config, int k, Weight r,
                          const Scalar& alpha, SuiteOptions options) {
  if (!(alpha > 0 && alpha < 1)) throw Error(ErrorCode::ParameterError, "alpha must lie in (0, 1)");
  if (r < 1) throw Error(ErrorCode::ParameterError, "r must be >= 1");
  SuiteReport report;
  report.suite = "lemma8";
  const auto inv = spanned_flats(config, k, {options.threads});
  std::vector<Lemma8Tally> tallies;
  lemma8_sweep(report, config, inv, k, alpha, {r}, json::object(), tallies);
  const Weight n = config.total();
  const Scalar bound = pow(Scalar(n), static_cast<unsigned>(k + 1)) /
                       (pow(1 - alpha, static_cast<unsigned>(k)) *
                        pow(Scalar(r), static_cast<unsigned>(k + 1)));
  report.witnesses = {{"n", n},
                      {"k", k},
                      {"r", r},
                      {"alpha", str(alpha)},
                      {"spanned", inv.size()},
                      {"count", tallies.front().count},
                      {"inner_checks", tallies.front().inner_checks},
                      {"bound", str(bound)}};
  return report;
}

std::vector<std::pair<std::string, MultiPointSet>> lemma8_configurations(std::uint64_t seed,
                                                                         int count) {
  std::vector<std::pair<std::string, MultiPointSet>> out;
  out.emplace_back("skew_lines_12", skew_lines(12));
  out.emplace_back("grid_3_2", grid(3, 2));
  out.emplace_back("flat_plus_line_n12_k3", flat_plus_line(12, 3, 4).points);
  out.emplace_back("k_lines_n12_k3_d3", k_lines(12, 3, 3).points);
  out.emplace_back("common_line_8", planes_through_common_line(8).points);
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const std::uint64_t s = seed * 1000 + static_cast<std::uint64_t>(i);
    const int d = 2 + i % 3;
    const int box = d == 2 ? 4 : 3;
    // the odd draws carry multiplicities, keeping the total at most 12
    const bool multi = i % 2 == 1;
    const int npts = multi ? 4 + i % 3 : 6 + i % 7;
    out.emplace_back("random_" + std::to_string(i),
                     random_configuration(npts, d, box, s, multi ? 2 : 1));
  }
  return out;
}

SuiteReport verify_lemma8_batch(std::uint64_t seed, int configurations, SuiteOptions options) {
  SuiteReport report;
  report.suite = "lemma8_batch";
  const std::vector<Scalar> alphas = {Scalar(1) / 2, Scalar(3) / 4};
  std::size_t flats = 0, inner = 0, runs = 0, qualifying = 0;
  for (const auto& [name, config] : lemma8_configurations(seed, configurations)) {
    const Weight n = config.total();
    std::vector<Weight> rs;
    for (Weight r = 3; r <= n; ++r) rs.push_back(r);
    json counts = json::object();
    for (int k = 0; k <= std::min(2, config.ambient_dim()); ++k) {
      const auto inv = spanned_flats(config, k, {options.threads});
      flats += inv.size();
      for (const auto& a : alphas) {
        std::vector<Lemma8Tally> tallies;
        lemma8_sweep(report, config, inv, k, a, rs,
                     {{"configuration", name}, {"seed", seed}}, tallies);
        json row = json::array();
        for (const auto& t : tallies) {
          row.push_back(t.count);
          inner += t.inner_checks;
          qualifying += t.count;
          ++runs;
        }
        counts["k" + std::to_string(k) + "_alpha_" + str(a)] = row;
      }
    }
    report.witnesses["configurations"][name] = {{"n", n}, {"d", config.ambient_dim()},
                                                {"counts_by_r_from_3", counts}};
  }
  report.witnesses["summary"] = {{"configurations", configurations}, {"sweeps", runs},
                                 {"spanned_flats", flats}, {"qualifying", qualifying},
                                 {"inner_checks", inner}};
  return report;
}

SuiteReport verify_degeneracy_implication(const MultiPointSet& config, int k,
                                          const Scalar& alpha, SuiteOptions options) {
  SuiteReport report;
  report.suite = "degeneracy_implication";
  const auto inv = spanned_flats(config, k, {options.threads});
  if (k < 2) {
    report.notes.push_back(
        "k < 2: no nonempty set has essential dimension <= k-1, so the implication "
        "is not asserted");
    report.witnesses = {{"k", k}, {"spanned", inv.size()}, {"checked", 0}};
    return report;
  }
  std::size_t both = 0, gap = 0;
  json gaps = json::array();
  for (const auto& e : inv.entries) {
    const bool essential = is_essentially_alpha_degenerate(config, e.flat, alpha);
    const bool plain = is_alpha_degenerate(config, e.flat, alpha);
    report.check(!essential || plain,
                 "essentially-alpha-degenerate flat is not alpha-degenerate",
                 {{"config", config_json(config)}, {"k", k}, {"alpha", str(alpha)},
                  {"flat", flat_json(e.flat)}});
    if (essential && plain) ++both;
    if (plain && !essential) {
      ++gap;
      if (gaps.size() < 4) {
        gaps.push_back({{"flat", flat_json(e.flat)}, {"weight", e.weight}});
      }
    }
  }
  report.witnesses = {{"k", k},          {"alpha", str(alpha)}, {"spanned", inv.size()},
                      {"both", both},    {"gap_count", gap},    {"gap_examples", gaps}};
  return report;
}

SuiteReport verify_implication_batch(std::uint64_t seed, SuiteOptions options) {
  SuiteReport report;
  report.suite = "implication_batch";
  std::map<std::string, MultiPointSet> configs;
  for (auto& [name, c] : lemma8_configurations(seed, 50)) configs.emplace(name, std::move(c));
  for (auto& [name, c] : standard_constructions(seed)) configs.emplace(name, std::move(c));
  const std::vector<Scalar> alphas = {Scalar(1) / 3, Scalar(1) / 2, Scalar(2) / 3,
                                      Scalar(3) / 4, Scalar(9) / 10};
  json gaps = json::array();
  std::size_t gap_total = 0;
  for (const auto& [name, config] : configs) {
    for (int k = 2; k <= std::min(3, config.ambient_dim()); ++k) {
      for (const auto& a : alphas) {
        auto sub = verify_degeneracy_implication(config, k, a, options);
        report.cases += sub.cases;
        for (auto f : sub.failures) {
          f.params["configuration"] = name;
          report.failures.push_back(std::move(f));
        }
        const std::size_t g = sub.witnesses["gap_count"].get<std::size_t>();
        gap_total += g;
        if (g > 0) {
          gaps.push_back({{"configuration", name}, {"k", k}, {"alpha", str(a)},
                          {"gap_count", g}, {"example", sub.witnesses["gap_examples"][0]}});
        }
      }
    }
  }
  report.witnesses = {{"configurations", configs.size()}, {"gap_total", gap_total},
                      {"gaps", gaps}};
  return report;
}

SuiteReport verify_essential_dimension(std::uint64_t seed, int sets) {
  SuiteReport report;
  report.suite = "essential_dimension";
  auto check_witness = [&](const std::string& name, const MultiPointSet& config,
                           const EssentialDimension& ed) {
    int total = 0;
    bool dims_ok = true;
    for (const auto& f : ed.witness.flats) {
      total += f.dim();
      dims_ok = dims_ok && f.dim() >= 1;
    }
    bool covered = true;
    for (const auto& p : config.points()) {
      bool hit = false;
      for (const auto& f : ed.witness.flats) hit = hit || contains(f, p);
      covered = covered && hit;
    }
    json witness = json::array();
    for (const auto& f : ed.witness.flats) witness.push_back(flat_json(f));
    report.check(dims_ok && covered && total == ed.K && ed.witness.total_dim == ed.K,
                 "witness cover invalid", {{"configuration", name}, {"K", ed.K}, {"witness", witness}});
  };

  std::vector<Point> line_pts, skew_pts;
  for (long t = 0; t < 5; ++t) line_pts.push_back(Point::canonicalize(Vector{1, t, 2 * t}));
  for (long t = 0; t < 3; ++t) skew_pts.push_back(Point::canonicalize(Vector{1, t, 0, 0}));
  for (long t = 0; t < 3; ++t) skew_pts.push_back(Point::canonicalize(Vector{1, 0, t, 1}));
  const std::vector<std::tuple<std::string, MultiPointSet, int>> fixed = {
      {"collinear_5", PointSet(2, line_pts), 1},
      {"grid_3_2", grid(3, 2), 2},
      {"skew_lines_3_3", PointSet(3, skew_pts), 2}};
  for (const auto& [name, config, expected] : fixed) {
    const auto ed = essential_dimension(config);
    report.check(ed.K == expected, "essential dimension differs from the expected value",
                 {{"configuration", name}, {"K", ed.K}, {"expected", expected}});
    check_witness(name, config, ed);
    report.witnesses["fixed"][name] = ed.K;
  }

  json monotone = json::object();
  for (int i = 0; i < sets; ++i) {
    const int d = 2 + i % 3;
    const auto config = random_configuration(5 + i % 6, d, d == 2 ? 4 : 3,
                                             seed * 100 + static_cast<std::uint64_t>(i),
                                             i % 4 == 3 ? 2 : 1);
    const std::string name = "random_" + std::to_string(i);
    const auto ed = essential_dimension(config);
    check_witness(name, config, ed);
    json values = json::array();
    Weight prev = 0;
    for (int t = 0; t <= ed.K + 1; ++t) {
      const Weight c = cover_max_points(config, t);
      report.check(c >= prev, "cover_max_points decreased in t",
                   {{"configuration", name}, {"seed", seed}, {"t", t}, {"value", c},
                    {"previous", prev}, {"config", config_json(config)}});
      prev = c;
      values.push_back(c);
    }
    report.check(cover_max_points(config, ed.K) == config.total(),
                 "cover_max_points(S, K) != |S|", {{"configuration", name}, {"K", ed.K}});
    if (ed.K > 1) {
      report.check(cover_max_points(config, ed.K - 1) < config.total(),
                   "a cover of total dimension K-1 reaches every point",
                   {{"configuration", name}, {"K", ed.K}});
    }
    monotone[name] = {{"K", ed.K}, {"cover_max", values}};
  }
  report.witnesses["random"] = monotone;
  return report;
}

SuiteReport verify_beck_constructions(int k, SuiteOptions options) {
  if (k < 2) throw Error(ErrorCode::ParameterError, "k must be >= 2");
  SuiteReport report;
  report.suite = "beck_constructions";
  const int n = k <= 3 ? 12 : 4 * k;
  const int half = n / 2;

  // Flat plus line: every spanned k-flat holds the flat or the line.
  auto fpl = flat_plus_line(n, k, k + 1);
  const auto inv = spanned_flats(fpl.points, k, {options.threads});
  const BigInt limit = BigInt(half) + binomial(half, k - 1);
  report.check(BigInt(static_cast<unsigned long>(inv.size())) <= limit,
               "flat_plus_line spans more than n/2 + C(n/2, k-1) k-flats",
               {{"n", n}, {"k", k}, {"count", inv.size()}, {"limit", str(limit)}});
  for (const auto& e : inv.entries) {
    report.check(is_subflat(fpl.flat, e.flat) || is_subflat(fpl.line, e.flat),
                 "spanned k-flat contains neither the (k-1)-flat nor the line",
                 {{"n", n}, {"k", k}, {"flat", flat_json(e.flat)}});
  }
  auto fpl_split = partition_cover(Cover::make({fpl.flat, fpl.line}), k);
  // ascending dimension puts the line first; for k = 2 both are lines and input order holds
  const Flat& expect_first = k == 2 ? fpl.flat : fpl.line;
  report.check(!fpl_split.all_lines_odd_k && fpl_split.first.flats.size() == 1 &&
                   fpl_split.first.flats.front() == expect_first &&
                   fpl_split.second.flats.size() == 1,
               "flat_plus_line cover did not split into its two members",
               {{"n", n}, {"k", k}});
  report.witnesses["flat_plus_line"] = {{"n", n},
                                        {"spanned", inv.size()},
                                        {"limit", str(limit)}};

  // k lines: some k-flat holds at least (k+1)n/(2k) points when k is odd.
  auto lines = k_lines(n, k, 2 * k - 1);
  auto line_split = partition_cover(Cover::make(lines.lines), k);
  report.check(line_split.all_lines_odd_k == (k % 2 == 1),
               "k_lines cover partition branch does not match the parity of k",
               {{"n", n}, {"k", k}, {"all_lines_odd_k", line_split.all_lines_odd_k}});
  json kl = {{"n", n}, {"all_lines_odd_k", line_split.all_lines_odd_k}};
  if (k % 2 == 1) {
    const auto kinv = spanned_flats(lines.points, k, {options.threads});
    Weight best = 0;
    for (const auto& e : kinv.entries) best = std::max(best, e.weight);
    const Scalar need = Scalar((k + 1) * n) / (2 * k);
    report.check(Scalar(best) >= need, "no k-flat holds (k+1)n/(2k) points",
                 {{"n", n}, {"k", k}, {"max_richness", best}, {"need", str(need)}});
    kl["max_richness"] = best;
    kl["need"] = str(need);
  }
  report.witnesses["k_lines"] = kl;

  if (k == 2) {
    for (int m : {4, 8, 12}) {
      const auto sk = spanned_flats(skew_lines(m), 2, {options.threads});
      Weight best = 0;
      for (const auto& e : sk.entries) best = std::max(best, e.weight);
      report.check(sk.size() == static_cast<std::size_t>(m) && best == m / 2 + 1,
                   "skew_lines(n) must span n planes of max richness n/2 + 1",
                   {{"n", m}, {"planes", sk.size()}, {"max_richness", best}});
      report.witnesses["skew_lines_" + std::to_string(m)] = {{"planes", sk.size()},
                                                              {"max_richness", best}};
    }
  }
  return report;
}

SuiteReport verify_partition_exhaustive(std::uint64_t seed, int configurations) {
  constexpr int d = 4;
  constexpr int max_total = 4;
  SuiteReport report;
  report.suite = "partition_exhaustive";
  std::size_t covers = 0, odd_marker = 0, single_flat = 0, partitioned = 0;

  for (int c = 0; c < configurations; ++c) {
    const auto pts = random_configuration(7, d, c % 2 == 0 ? 2 : 3, seed + c);
    std::vector<Flat> flats;
    for (int k = 1; k <= d; ++k) {
      for (auto& e : spanned_flats(pts, k).entries) flats.push_back(std::move(e.flat));
    }

    std::vector<std::size_t> chosen;
    auto visit = [&](auto&& self, std::size_t start, int budget) -> void {
      if (!chosen.empty()) {
        std::vector<Flat> members;
        for (auto i : chosen) members.push_back(flats[i]);
        const Cover cover = Cover::make(members);
        ++covers;
        for (int k = std::max(cover.total_dim, 1); k <= max_total; ++k) {
          json params = {{"seed", seed + c}, {"configuration", c}, {"k", k},
                         {"cover", json::array()}};
          for (const auto& f : members) params["cover"].push_back(flat_json(f));
          PartitionResult res;
          try {
            res = partition_cover(cover, k);
          } catch (const Error& e) {
            report.check(false, e.what(), params);
            continue;
          }
          std::vector<Flat> back = res.first.flats;
          back.insert(back.end(), res.second.flats.begin(), res.second.flats.end());
          std::sort(back.begin(), back.end());
          std::sort(members.begin(), members.end());
          report.check(back == members, "partition halves do not reassemble the cover", params);
          report.check(join_all(res.first.flats, d).dim() <= k - 1,
                       "first half spans more than a (k-1)-flat", params);
          const bool lines_only = std::all_of(members.begin(), members.end(),
                                              [](const Flat& f) { return f.dim() == 1; });
          if (res.all_lines_odd_k) {
            ++odd_marker;
            report.check(lines_only && k % 2 == 1,
                         "all-lines marker outside the all-lines, odd-k case", params);
          } else if (res.single_k_flat) {
            ++single_flat;
            report.check(members.size() == 1 && members.front().dim() == k,
                         "single k-flat marker on a splittable cover", params);
          } else {
            ++partitioned;
            report.check(join_all(res.second.flats, d).dim() <= k - 1,
                         "second half spans more than a (k-1)-flat", params);
          }
        }
      }
      for (std::size_t i = start; i < flats.size(); ++i) {
        if (flats[i].dim() > budget) continue;
        chosen.push_back(i);
        self(self, i + 1, budget - flats[i].dim());
        chosen.pop_back();
      }
    };
    visit(visit, 0, max_total);
  }
  report.witnesses = {{"covers", covers},
                      {"partitioned", partitioned},
                      {"all_lines_odd_k", odd_marker},
                      {"single_k_flat", single_flat}};
  if (single_flat > 0) {
    report.notes.push_back("a cover made of one k-flat has no split into two (k-1)-flats; " +
                           std::to_string(single_flat) + " such covers reported separately");
  }
  return report;
}

std::vector<std::pair<std::string, MultiPointSet>> standard_constructions(std::uint64_t seed) {
  std::vector<std::pair<std::string, MultiPointSet>> out;
  for (int n : {4, 8, 12}) out.emplace_back("skew_lines_" + std::to_string(n), skew_lines(n));
  out.emplace_back("flat_plus_line_n12_k3", flat_plus_line(12, 3, 4).points);
  out.emplace_back("flat_plus_line_n8_k2", flat_plus_line(8, 2, 3).points);
  out.emplace_back("k_lines_n12_k3_d5", k_lines(12, 3, 5).points);
  out.emplace_back("k_lines_n12_k3_d3", k_lines(12, 3, 3).points);
  out.emplace_back("k_lines_n8_k2_d3", k_lines(8, 2, 3).points);
  out.emplace_back("grid_3_2", grid(3, 2));
  out.emplace_back("grid_2_3", grid(2, 3));
  out.emplace_back("common_line_8", planes_through_common_line(8).points);
  out.emplace_back("random_gp_8_3", random_general_position(8, 3, seed));
  out.emplace_back("random_10_3", random_configuration(10, 3, 3, seed, 2));
  return out;
}

SuiteReport verify_oracle_equivalence(std::uint64_t seed, SuiteOptions options) {
  SuiteReport report;
  report.suite = "oracle_equivalence";
  const unsigned threads = std::max(2U, options.threads);
  for (const auto& [name, config] : standard_constructions(seed)) {
    json counts = json::array();
    for (int k = 0; k <= std::min(3, config.ambient_dim()); ++k) {
      const auto by_subsets = spanned_flats(config, k);
      const auto incremental = spanned_flats_incremental(config, k);
      const auto threaded = spanned_flats(config, k, {threads});
      report.check(by_subsets == incremental,
                   "subset enumeration and incremental construction disagree",
                   {{"construction", name}, {"seed", seed}, {"k", k},
                    {"subsets", by_subsets.size()}, {"incremental", incremental.size()}});
      report.check(by_subsets == threaded, "threaded enumeration differs",
                   {{"construction", name}, {"seed", seed}, {"k", k}, {"threads", threads}});
      counts.push_back(by_subsets.size());
    }
    report.witnesses[name] = counts;
  }
  return report;
}

SuiteReport verify_spanned_ordering(std::uint64_t seed, SuiteOptions options) {
  SuiteReport report;
  report.suite = "spanned_ordering";
  for (const auto& [name, config] : standard_constructions(seed)) {
    const int d = config.ambient_dim();
    const int K = essential_dimension(config).K;
    std::map<int, std::size_t> f;
    auto count = [&](int j) -> std::size_t {
      if (j > d) return 0;
      auto it = f.find(j);
      if (it == f.end()) it = f.emplace(j, spanned_flats(config, j, {options.threads}).size()).first;
      return it->second;
    };
    json rows = json::array();
    for (int k = K; k <= d + 1; ++k) {
      const auto lo = count(k - 1), hi = count(k);
      report.check((lo == 0 && hi == 0) || lo > hi,
                   "neither f_{k-1} = f_k = 0 nor f_{k-1} > f_k",
                   {{"construction", name}, {"seed", seed}, {"k", k}, {"K", K},
                    {"f_k_minus_1", lo}, {"f_k", hi}});
      rows.push_back({k, lo, hi});
    }
    report.witnesses[name] = {{"K", K}, {"k_fkm1_fk", rows}};
  }
  return report;
}

SuiteReport rich_report(const MultiPointSet& config, int k, const std::vector<Weight>& r_list,
                        const std::vector<Scalar>& alpha_list, const Scalar& gamma,
                        SuiteOptions options) {
  SuiteReport report;
  report.suite = "rich_report";
  const auto inv = spanned_flats(config, k, {options.threads});
  const Weight n = config.total();
  report.notes.push_back(
      "bound columns evaluate n^(k+1) r^-(k+2) + n^k r^-k at this instance; no constant "
      "is asserted and desk-scale ratios do not confirm asymptotic claims");
  if (config.size() > 0 && span_of_points(config.points()).dim() < k) {
    report.notes.push_back(
        "warning: all points lie in a flat of dimension < k, so every k-flat through it is "
        + std::to_string(n) + "-rich; unspanned rich k-flats are unbounded");
  }

  std::vector<bool> saturated;
  for (const auto& e : inv.entries) {
    saturated.push_back(k >= 1 && is_gamma_saturated(config, e.flat, gamma));
  }
  std::map<std::string, std::vector<std::pair<bool, bool>>> degeneracy;
  for (const auto& a : alpha_list) {
    auto& flags = degeneracy[str(a)];
    for (const auto& e : inv.entries) {
      flags.emplace_back(is_alpha_degenerate(config, e.flat, a),
                         is_essentially_alpha_degenerate(config, e.flat, a));
    }
  }

  Table table;
  table.header = {"r",         "alpha",         "rich",  "alpha_degenerate",
                  "essentially_alpha_degenerate", "gamma_saturated", "bound",
                  "ratio"};
  for (Weight r : r_list) {
    const Scalar bound = r < 1 ? Scalar(0)
                               : pow(Scalar(n), static_cast<unsigned>(k + 1)) /
                                         pow(Scalar(r), static_cast<unsigned>(k + 2)) +
                                     pow(Scalar(n), static_cast<unsigned>(k)) /
                                         pow(Scalar(r), static_cast<unsigned>(k));
    for (const auto& a : alpha_list) {
      const auto& flags = degeneracy[str(a)];
      std::size_t rich = 0, deg = 0, ess = 0, sat = 0;
      for (std::size_t i = 0; i < inv.entries.size(); ++i) {
        if (inv.entries[i].weight < r) continue;
        ++rich;
        deg += flags[i].first;
        ess += flags[i].second;
        sat += saturated[i];
      }
      const std::string ratio =
          bound == 0 ? "-" : str(Scalar(static_cast<long>(deg)) / bound);
      table.rows.push_back({std::to_string(r), str(a), std::to_string(rich),
                            std::to_string(deg), std::to_string(ess), std::to_string(sat),
                            bound == 0 ? "-" : str(bound), ratio});
    }
  }
  report.table = std::move(table);

  report.witnesses = {{"n", n}, {"k", k}, {"f_k", inv.size()}, {"gamma", str(gamma)}};
  if (config.size() > 0 && config.ambient_dim() >= 1) {
    const auto ed = essential_dimension(config);
    report.witnesses["K"] = ed.K;
    json witness = json::array();
    for (const auto& f : ed.witness.flats) witness.push_back(flat_json(f));
    report.witnesses["K_witness"] = witness;
    report.witnesses["g_profile"] = g_profile(config, k).values;
    json beck = json::array();
    for (const auto& b : beck_lower_profile(config, k)) beck.push_back(str(b));
    report.witnesses["beck_products"] = beck;
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "dim_identities", "lemma8",   "implication", "beck",
      "partition",      "equivalence", "ordering", "essential"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, SuiteOptions options) {
  if (name == "dim_identities") return verify_dim_identities(seed, 1000, 200);
  if (name == "lemma8") return verify_lemma8_batch(seed, 50, options);
  if (name == "implication") return verify_implication_batch(seed, options);
  if (name == "beck") {
    SuiteReport report;
    report.suite = "beck";
    for (int k : {2, 3, 4}) {
      report.absorb("k" + std::to_string(k), verify_beck_constructions(k, options));
    }
    return report;
  }
  if (name == "partition") return verify_partition_exhaustive(seed, 3);
  if (name == "equivalence") return verify_oracle_equivalence(seed, options);
  if (name == "ordering") return verify_spanned_ordering(seed, options);
  if (name == "essential") return verify_essential_dimension(seed, 20);
  throw Error(ErrorCode::ParameterError, "unknown suite '" + name + "'");
}

}  // namespace flatinc
