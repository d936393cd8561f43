// flatcheck: command line front end for the flatinc suites.
//
// exit codes: 0 pass, 1 assertion failure, 2 usage or parse error

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flatinc/config_io.hpp"
#include "flatinc/constructions.hpp"
#include "flatinc/error.hpp"
#include "flatinc/essential.hpp"
#include "flatinc/incidence.hpp"
#include "flatinc/report.hpp"
#include "flatinc/scalar.hpp"
#include "flatinc/suites.hpp"

using namespace flatinc;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::int64_t max_n = 256;
  unsigned threads = 1;
  std::string format = "json";
  std::string output;
};

Scalar rational_arg(const std::string& text, const char* what) {
  auto v = parse_rational(text);
  if (!v) throw UsageError(std::string(what) + ": '" + text + "' is not a rational a or a/b");
  return *v;
}

ReportFormat format_arg(const std::string& text) {
  auto f = parse_format(text);
  if (!f) throw UsageError("unknown format '" + text + "' (json or csv)");
  return *f;
}

MultiPointSet load_checked(const std::string& path, const Globals& g) {
  auto config = load_config(path);
  if (config.total() > g.max_n) {
    throw UsageError(path + ": " + std::to_string(config.total()) +
                     " points exceed --max-n " + std::to_string(g.max_n));
  }
  return config;
}

int emit(const SuiteReport& report, const Globals& g) {
  const auto format = format_arg(g.format);
  if (g.output.empty()) {
    std::cout << render(report, format);
  } else {
    save_report(report, g.output, format);
  }
  return report.passed() ? kPass : kFail;
}

std::string str(const BigInt& v) { return v.get_str(); }

int cmd_gen(const std::string& name, const std::vector<std::string>& params,
            const std::string& out, const Globals& g) {
  ConstructionSpec spec{name, {}};
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
    const auto value = kv.substr(eq + 1);
    std::size_t used = 0;
    std::int64_t parsed = 0;
    try {
      parsed = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty()) throw UsageError("--param " + kv + ": integer expected");
    spec.params[kv.substr(0, eq)] = parsed;
  }
  if (!spec.params.contains("seed")) spec.params["seed"] = static_cast<std::int64_t>(g.seed);
  if (auto it = spec.params.find("n"); it != spec.params.end() && it->second > g.max_n) {
    throw UsageError("n=" + std::to_string(it->second) + " exceeds --max-n " + std::to_string(g.max_n));
  }
  const auto config = build_construction(spec);
  if (out.empty()) {
    std::cout << serialize_config(config);
  } else {
    save_config(config, out);
  }
  return kPass;
}

int cmd_count(const std::string& path, int k, std::vector<Weight> r_list, const Globals& g) {
  const auto config = load_checked(path, g);
  const auto inv = spanned_flats(config, k, {g.threads});
  SuiteReport report;
  report.suite = "count";
  report.witnesses["n"] = config.total();
  report.witnesses["k"] = k;
  report.witnesses["f_k"] = inv.size();
  Weight best = 0;
  for (const auto& e : inv.entries) best = std::max(best, e.weight);
  report.witnesses["max_richness"] = best;
  if (r_list.empty()) {
    for (Weight r = 1; r <= best; ++r) r_list.push_back(r);
  }
  Table table{{"r", "rich"}, {}};
  for (const auto& [r, count] : rich_profile(inv, r_list).rows) {
    table.rows.push_back({std::to_string(r), std::to_string(count)});
  }
  report.table = std::move(table);
  return emit(report, g);
}

int cmd_essdim(const std::string& path, const Globals& g) {
  const auto config = load_checked(path, g);
  const auto ed = essential_dimension(config);
  SuiteReport report;
  report.suite = "essdim";
  report.witnesses["n"] = config.total();
  report.witnesses["K"] = ed.K;
  json cover = json::array();
  for (const auto& f : ed.witness.flats) cover.push_back(flat_json(f));
  report.witnesses["witness"] = cover;
  report.witnesses["g_profile"] = g_profile(config, ed.K).values;
  json beck = json::array();
  for (const auto& b : beck_lower_profile(config, ed.K)) beck.push_back(str(b));
  report.witnesses["beck_products"] = beck;
  return emit(report, g);
}

int cmd_degeneracy(const std::string& path, int k, const std::string& alpha_text,
                   const std::string& gamma_text, const Globals& g) {
  const Scalar alpha = rational_arg(alpha_text, "--alpha");
  const Scalar gamma = rational_arg(gamma_text, "--gamma");
  const auto config = load_checked(path, g);
  const auto inv = spanned_flats(config, k, {g.threads});
  SuiteReport report;
  report.suite = "degeneracy";
  report.witnesses["n"] = config.total();
  report.witnesses["k"] = k;
  report.witnesses["alpha"] = format_rational(alpha);
  report.witnesses["f_k"] = inv.size();
  Table table{{"index", "weight", "max_subflat", "alpha_degenerate",
               "essentially_alpha_degenerate", "gamma_saturated"},
              {}};
  std::size_t deg = 0, ess = 0, gap = 0;
  json flats = json::array();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const auto& e = inv.entries[i];
    const auto cov = max_subflat_coverage(config, e.flat, e.points);
    const bool a = is_alpha_degenerate(config, e.flat, alpha);
    const bool b = is_essentially_alpha_degenerate(config, e.flat, alpha);
    const bool s = is_gamma_saturated(config, e.flat, gamma);
    deg += a;
    ess += b;
    if (a && !b) ++gap;
    // ess-degenerate flats must be degenerate
    report.check(!b || a, "essentially alpha-degenerate flat is not alpha-degenerate",
                 {{"flat", flat_json(e.flat)}, {"alpha", format_rational(alpha)},
                  {"weight", e.weight}, {"max_subflat", cov.count}});
    table.rows.push_back({std::to_string(i), std::to_string(e.weight), std::to_string(cov.count),
                          a ? "1" : "0", b ? "1" : "0", s ? "1" : "0"});
    flats.push_back(flat_json(e.flat));
  }
  report.witnesses["alpha_degenerate"] = deg;
  report.witnesses["essentially_alpha_degenerate"] = ess;
  report.witnesses["gap"] = gap;
  report.witnesses["flats"] = flats;
  report.table = std::move(table);
  return emit(report, g);
}

int cmd_report(const std::string& path, int k, const std::vector<Weight>& r_list,
               const std::vector<std::string>& alpha_texts, const std::string& gamma_text,
               const Globals& g) {
  std::vector<Scalar> alphas;
  for (const auto& a : alpha_texts) alphas.push_back(rational_arg(a, "--alpha"));
  const Scalar gamma = rational_arg(gamma_text, "--gamma");
  const auto config = load_checked(path, g);
  return emit(rich_report(config, k, r_list, alphas, gamma, {g.threads}), g);
}

int cmd_verify(const std::string& suite, const Globals& g) {
  if (suite != "all") return emit(run_suite(suite, g.seed, {g.threads}), g);
  SuiteReport all;
  all.suite = "all";
  for (const auto& name : suite_names()) all.absorb(name, run_suite(name, g.seed, {g.threads}));
  return emit(all, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flatcheck: exact incidence checks for flats spanned by point sets"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for random constructions and suites")->capture_default_str();
  app.add_option("--max-n", g.max_n, "refuse configurations heavier than this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (output does not depend on it)")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
  app.add_option("--format", g.format, "json or csv")->capture_default_str();
  app.add_option("--output", g.output, "write the report here instead of stdout");
  app.fallthrough();

  std::function<int()> action;

  auto* gen = app.add_subcommand("gen", "write a named construction as a config file");
  std::string gen_name, gen_out;
  std::vector<std::string> gen_params;
  gen->add_option("construction", gen_name,
                  "grid, skew_lines, flat_plus_line, k_lines, common_line, random_gp, random")
      ->required();
  gen->add_option("--param", gen_params, "key=value, repeatable");
  gen->add_option("-o,--out", gen_out, "output file (stdout if omitted)");
  gen->callback([&] { action = [&] { return cmd_gen(gen_name, gen_params, gen_out, g); }; });

  std::string file;
  int k = 1;
  std::vector<Weight> r_list;

  auto* count = app.add_subcommand("count", "spanned k-flats and richness profile");
  count->add_option("config", file)->required();
  count->add_option("--k", k)->required();
  count->add_option("--r", r_list, "richness thresholds (default 1..max)");
  count->callback([&] { action = [&] { return cmd_count(file, k, r_list, g); }; });

  auto* essdim = app.add_subcommand("essdim", "essential dimension with a witness cover");
  essdim->add_option("config", file)->required();
  essdim->callback([&] { action = [&] { return cmd_essdim(file, g); }; });

  std::string alpha = "1/2", gamma = "1/4";
  auto* degen = app.add_subcommand("degeneracy", "degeneracy flags for each spanned k-flat");
  degen->add_option("config", file)->required();
  degen->add_option("--k", k)->required();
  degen->add_option("--alpha", alpha)->required();
  degen->add_option("--gamma", gamma)->capture_default_str();
  degen->callback([&] { action = [&] { return cmd_degeneracy(file, k, alpha, gamma, g); }; });

  std::vector<std::string> alphas;
  auto* report = app.add_subcommand("report", "rich/degenerate counts per (r, alpha)");
  report->add_option("config", file)->required();
  report->add_option("--k", k)->required();
  report->add_option("--r", r_list, "repeatable");
  report->add_option("--alpha", alphas, "repeatable")->required();
  report->add_option("--gamma", gamma)->capture_default_str();
  report->callback([&] { action = [&] { return cmd_report(file, k, r_list, alphas, gamma, g); }; });

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a batch suite, or all of them");
  std::string suites_help = "all";
  for (const auto& n : suite_names()) suites_help += ", " + n;
  verify->add_option("suite", suite, suites_help)->required();
  verify->callback([&] { action = [&] { return cmd_verify(suite, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "flatcheck: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "flatcheck: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvariantViolated:
      case ErrorCode::RetryLimit:
        return kFail;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "flatcheck: " << e.what() << "\n";
    return kFail;
  }
}
