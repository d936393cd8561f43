// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "flatinc/constructions.hpp"
#include "flatinc/incidence.hpp"
#include "flatinc/procedures.hpp"
#include "flatinc/report.hpp"
#include "flatinc/suites.hpp"
#include "oracles.hpp"

using namespace flatinc;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 1;

int failed = 0;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void line(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!ok) ++failed;
}

std::string first_failure(const SuiteReport& r) {
  if (r.failures.empty()) return "";
  return "; first failure: " + r.failures.front().what + " " + r.failures.front().params.dump();
}

Weight max_weight(const FlatInventory& inv) {
  Weight best = 0;
  for (const auto& e : inv.entries) best = std::max(best, e.weight);
  return best;
}

struct Timed {
  SuiteReport report;
  double seconds = 0;
};

Timed timed_suite(const std::string& name, unsigned threads) {
  const auto t0 = Clock::now();
  Timed out{run_suite(name, kSeed, {threads}), 0};
  out.seconds = since(t0);
  return out;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  std::map<std::string, Timed> runs;
  for (const auto& name : suite_names()) runs[name] = timed_suite(name, 1);

  // 1
  {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream d;
    for (int n : {4, 8, 12}) {
      const auto s = skew_lines(n);
      const auto inv = spanned_flats(s, 2);
      const auto planes = oracle::spanned(oracle::from(s), 2);
      const Weight best = max_weight(inv);
      ok = ok && inv.size() == static_cast<std::size_t>(n) && planes.size() == inv.size() &&
           best == n / 2 + 1;
      d << "n=" << n << " planes=" << inv.size() << " max=" << best << " ";
    }
    const double t = since(t0);
    d << "(" << t << "s)";
    line(1, ok && t < 1.0, d.str());
  }

  // 2
  {
    const auto t0 = Clock::now();
    const auto fpl = flat_plus_line(12, 3, 4);
    const auto inv = spanned_flats(fpl.points, 3);
    bool contain = true;
    for (const auto& e : inv.entries) {
      contain = contain && (is_subflat(fpl.flat, e.flat) || is_subflat(fpl.line, e.flat));
    }
    const bool agrees = oracle::spanned(oracle::from(fpl.points), 3).size() == inv.size();
    const double t = since(t0);
    std::ostringstream d;
    d << "spanned 3-flats=" << inv.size() << " <= 21, containment=" << contain
      << ", oracle agrees=" << agrees << " (" << t << "s)";
    line(2, contain && agrees && inv.size() <= 21 && t < 10.0, d.str());
  }

  // 3
  {
    const auto kl = k_lines(12, 3, 5);
    const Weight best = max_weight(spanned_flats(kl.points, 3));
    // (k+1)n/(2k) = 4*12/6
    line(3, best >= 8, "max 3-flat richness " + std::to_string(best) + " >= 8");
  }

  // 4, 5
  {
    const auto& run = runs["lemma8"];
    const auto& w = run.report.witnesses;
    std::size_t in_range = 0;
    for (const auto& [name, c] : w["configurations"].items()) {
      if (c["n"].get<int>() <= 12 && c["d"].get<int>() <= 4) ++in_range;
    }
    std::size_t outer = 0, inner = 0;
    for (const auto& f : run.report.failures) {
      if (f.what.find("independent ordered lists") != std::string::npos) {
        ++inner;
      } else {
        ++outer;
      }
    }
    const auto& s = w["summary"];
    std::ostringstream d4;
    d4 << in_range << " configurations with n<=12, d<=4; qualifying flats="
       << s["qualifying"] << "; bound failures=" << outer << " (" << run.seconds << "s)";
    line(4, in_range >= 50 && outer == 0 && run.seconds < 120.0,
         d4.str() + (outer ? first_failure(run.report) : ""));
    std::ostringstream d5;
    d5 << "inner list checks=" << s["inner_checks"] << "; failures=" << inner;
    line(5, inner == 0 && s["inner_checks"].get<std::size_t>() > 0,
         d5.str() + (inner ? first_failure(run.report) : ""));
  }

  // 6
  {
    const auto& run = runs["dim_identities"];
    std::ostringstream d;
    d << run.report.cases << " cases (1000 pairs + 200 families), failures="
      << run.report.failures.size() << " (" << run.seconds << "s)";
    line(6, run.report.passed() && run.report.cases == 1200 && run.seconds < 5.0,
         d.str() + first_failure(run.report));
  }

  // 7
  {
    const auto& run = runs["partition"];
    const auto& w = run.report.witnesses;
    std::ostringstream d;
    d << w["covers"] << " covers, " << run.report.cases << " checks; partitioned="
      << w["partitioned"] << ", all_lines_odd_k=" << w["all_lines_odd_k"]
      << ", single_k_flat=" << w["single_k_flat"] << " (" << run.seconds << "s)";
    // single_k_flat covers are counted, not failed; see README
    line(7, run.report.passed() && run.seconds < 60.0 && w["all_lines_odd_k"].get<int>() > 0,
         d.str() + first_failure(run.report));
  }

  // 8
  {
    const auto& run = runs["equivalence"];
    line(8, run.report.passed() && run.report.cases > 0,
         std::to_string(run.report.cases) + " inventories compared" + first_failure(run.report));
  }

  // 9
  {
    const auto& run = runs["essential"];
    line(9, run.report.passed() && run.report.cases > 0,
         std::to_string(run.report.cases) + " checks incl. collinear K=1, grid K=2, "
         "skew 3+3 K=2" + first_failure(run.report));
  }

  // 10
  {
    const auto& run = runs["implication"];
    bool witnessed = false;
    for (const auto& g : run.report.witnesses["gaps"]) {
      witnessed = witnessed || (g["configuration"] == "skew_lines_12" && g["k"] == 3 &&
                                g["alpha"] == "3/4");
    }
    std::ostringstream d;
    d << run.report.cases << " flats checked over " << run.report.witnesses["configurations"]
      << " configurations; gap total=" << run.report.witnesses["gap_total"]
      << "; skew_lines_12 3-flat gap at 3/4 recorded=" << witnessed;
    line(10, run.report.passed() && witnessed, d.str() + first_failure(run.report));
  }

  // 11
  {
    const auto& run = runs["ordering"];
    line(11, run.report.passed() && run.report.cases > 0,
         std::to_string(run.report.cases) + " (set, k) pairs" + first_failure(run.report));
  }

  // 12
  {
    std::string mismatch;
    for (const auto& name : suite_names()) {
      const auto a = render(runs[name].report, ReportFormat::Json);
      const auto b = render(run_suite(name, kSeed, {1}), ReportFormat::Json);
      const auto c = render(run_suite(name, kSeed, {4}), ReportFormat::Json);
      if (a != b) mismatch += " " + name + "(rerun)";
      if (a != c) mismatch += " " + name + "(threads)";
    }
    const double t = since(start);
    std::ostringstream d;
    d << suite_names().size() << " suites x 3 runs; total " << t << "s";
    if (!mismatch.empty()) d << "; differ:" << mismatch;
    line(12, mismatch.empty() && t < 300.0, d.str());
  }

  std::cout << (failed ? "FAILED " : "ALL PASSED ") << 12 - failed << "/12" << std::endl;
  return failed ? 1 : 0;
}
