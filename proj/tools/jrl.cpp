// jrl: command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 verification failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jrl/conductor/bounds.hpp"
#include "jrl/conductor/kodaira.hpp"
#include "jrl/fibration/sampling.hpp"
#include "jrl/io/report.hpp"
#include "jrl/io/surface_toml.hpp"
#include "jrl/nagao/estimate.hpp"
#include "jrl/towers/cover.hpp"
#include "jrl/towers/orbits.hpp"
#include "jrl/towers/tower.hpp"
#include "jrl/util/parallel.hpp"

namespace fs = std::filesystem;
using namespace jrl;
using io::json;

namespace {

constexpr int kInputError = 1;
constexpr int kVerificationFailure = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrimeRange {
  std::uint64_t lo = 5, hi = 97;
};

PrimeRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("--primes expects lo..hi, got '" + text + "'");
  try {
    std::size_t used = 0;
    PrimeRange r{std::stoull(text.substr(0, dots), &used), 0};
    if (used != dots) throw std::invalid_argument("");
    const std::string hi = text.substr(dots + 2);
    r.hi = std::stoull(hi, &used);
    if (used != hi.size()) throw std::invalid_argument("");
    if (r.lo > r.hi) throw InputError("--primes range is empty: " + text);
    return r;
  } catch (const std::logic_error&) {
    throw InputError("--primes expects lo..hi, got '" + text + "'");
  }
}

/// A path, or a catalogue name under data/surfaces.
fs::path resolve_surface(const std::string& arg) {
  if (fs::exists(arg)) return arg;
  for (const fs::path& candidate : {fs::path(JRL_DATA_DIR) / "surfaces" / arg,
                                    fs::path(JRL_DATA_DIR) / "surfaces" / (arg + ".toml")}) {
    if (fs::exists(candidate)) return candidate;
  }
  throw InputError("surface file not found: " + arg);
}

struct Common {
  std::string out;
  int jobs = 0;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Output file (default stdout)");
  cmd->add_option("--jobs", c.jobs, "Worker threads (default JRL_JOBS or all cores)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", c.seed, "Seed for internal validation sampling; outputs do not depend on it");
}

/// Writes `text` to --out (plus a manifest next to it) or to stdout.
void emit(const Common& c, const std::string& text, io::RunManifest manifest,
          std::chrono::steady_clock::time_point start) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + c.out);
    f << text;
  }
  manifest.outputs.push_back(c.out);
  manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ofstream m(c.out + ".manifest.json", std::ios::binary);
  m << manifest.to_json().dump(2) << '\n';
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank bounds and Nagao estimates for fibered surfaces"};
  app.set_version_flag("--version", std::string(JRL_VERSION));
  app.require_subcommand(1);
  Common common;
  std::string surface_arg, primes_arg, estimator_arg = "dirichlet", mode = "full", kind = "a", suite = "cover";
  std::uint64_t p_min = 5, p_max = 10000;
  int window = 4, rank = 2;
  long n = 2, f_base = 1, g_base = 1, g_fiber = 1, index = 1, n_max = 100;
  std::vector<long> n_list{2};
  double budget = 1e6;

  auto* trace = app.add_subcommand("trace", "Average Frobenius traces per good prime (CSV)");
  trace->add_option("--surface", surface_arg, "Surface TOML file or catalogue name")->required();
  trace->add_option("--primes", primes_arg, "Prime range lo..hi")->default_str("5..97");
  add_common(trace, common);

  auto* nagao_cmd = app.add_subcommand("nagao", "Residue rank estimate (JSON)");
  nagao_cmd->add_option("--surface", surface_arg, "Surface TOML file or catalogue name")->required();
  nagao_cmd->add_option("--pmin", p_min, "Smallest prime")->default_val(5);
  nagao_cmd->add_option("--pmax", p_max, "Largest prime")->default_val(10000);
  nagao_cmd->add_option("--estimator", estimator_arg, "Headline estimator")
      ->check(CLI::IsMember({"dirichlet", "cesaro"}))
      ->default_val("dirichlet");
  nagao_cmd->add_option("--window", window, "Checkpoints in the extrapolation")->default_val(4);
  add_common(nagao_cmd, common);

  auto* cond = app.add_subcommand("conductor", "Conductor degree and local data (JSON)");
  cond->add_option("--surface", surface_arg, "Surface TOML file or catalogue name")->required();
  add_common(cond, common);

  auto* bound = app.add_subcommand("bound", "Average-trace excess over the geometric bound (JSON)");
  bound->add_option("--surface", surface_arg, "Surface TOML file or catalogue name")->required();
  bound->add_option("--primes", primes_arg, "Prime range lo..hi")->default_str("5..499");
  add_common(bound, common);

  auto* tower = app.add_subcommand("tower", "Bounds along a tower of covers (CSV)");
  tower->add_option("--kind", kind, "a: multiplication on an elliptic base, b: Jacobian pullback")
      ->check(CLI::IsMember({"a", "b"}))
      ->default_val("a");
  tower->add_option("--f-base", f_base, "Conductor degree of the base family")->default_val(1);
  tower->add_option("--g-base", g_base, "Genus of the base curve")->default_val(1);
  tower->add_option("--g-fiber", g_fiber, "Genus of the fibers")->default_val(1);
  tower->add_option("--index", index, "Galois index bound I")->default_val(1);
  tower->add_option("--n-max", n_max, "Largest level")->default_val(100);
  add_common(tower, common);

  auto* orbits = app.add_subcommand("orbits", "Orbits of GL_m(Z/n) on (Z/n)^m");
  orbits->add_option("--n", n, "Modulus")->required()->check(CLI::PositiveNumber);
  orbits->add_option("--rank", rank, "Rank m")->default_val(2)->check(CLI::PositiveNumber);
  orbits->add_option("--mode", mode, "Method")->check(CLI::IsMember({"full", "content", "burnside"}))->default_val("full");
  orbits->add_option("--budget", budget, "Largest n^(m^2) to enumerate")->default_val(1e6);
  add_common(orbits, common);

  auto* verify = app.add_subcommand("verify", "Brute-force identity checks (exit 2 on failure)");
  verify->add_option("--suite", suite, "cover or orbits")->check(CLI::IsMember({"cover", "orbits"}))->default_val("cover");
  verify->add_option("--surface", surface_arg, "Surface over an elliptic base (cover suite)");
  verify->add_option("--n", n_list, "Cover degrees (cover) or largest modulus (orbits)")->delimiter(',');
  verify->add_option("--primes", primes_arg, "Prime range lo..hi")->default_str("5..97");
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  io::RunManifest manifest;
  for (int i = 0; i < argc; ++i) manifest.command += (i ? " " : "") + std::string(argv[i]);

  try {
    const unsigned jobs = util::resolve_jobs(common.jobs);
    auto load = [&]() { return fibration::PreparedSurface(io::load_surface(resolve_surface(surface_arg))); };

    if (trace->parsed() || bound->parsed()) {
      const auto range = parse_range(primes_arg.empty() ? (trace->parsed() ? "5..97" : "5..499") : primes_arg);
      auto s = load();
      const auto primes = fibration::good_primes(s, std::max<std::uint64_t>(range.lo, 5), range.hi);
      const auto samples = fibration::trace_samples(s, primes, jobs);
      manifest.config = {{"surface", surface_arg}, {"primes", std::to_string(range.lo) + ".." + std::to_string(range.hi)}};
      if (trace->parsed()) {
        std::ostringstream csv;
        io::write_trace_csv(csv, samples);
        emit(common, csv.str(), manifest, start);
        std::cerr << s.spec.name << ": " << samples.size() << " good primes in " << range.lo << ".." << range.hi << "\n";
      } else {
        const auto report = conductor::conductor_degree(s.spec);
        const auto tb = fibration::trace_bound_check(s.spec, report.f, samples);
        json out = io::trace_bound_json(s.spec, tb, samples);
        out["f"] = report.f;
        out["geometric_bound"] =
            conductor::geometric_bound(s.spec.genus_fiber, s.spec.base_genus(), report.f, s.spec.dim_trace);
        emit(common, dump(out), manifest, start);
        std::cerr << s.spec.name << ": G = " << tb.bound << ", max excess " << io::format_double(tb.max_excess)
                  << " at p = " << tb.argmax << (tb.stable ? ", stable" : ", still growing") << "\n";
      }
      return 0;
    }

    if (nagao_cmd->parsed()) {
      nagao::EstimatorConfig cfg{p_min, p_max, nagao::parse_estimator(estimator_arg), window};
      cfg.validate();
      auto s = load();
      const auto samples = fibration::trace_samples(s, fibration::good_primes(s, p_min, p_max), jobs);
      auto headline = nagao::residue_estimate(samples, cfg);
      auto other_cfg = cfg;
      other_cfg.estimator = cfg.estimator == nagao::Estimator::DirichletPartialSum ? nagao::Estimator::CesaroNagao
                                                                                    : nagao::Estimator::DirichletPartialSum;
      auto other = nagao::residue_estimate(samples, other_cfg);
      json out{{"surface", s.spec.name}, {"p_min", p_min}, {"p_max", p_max}, {"window", window},
               {"n_primes", samples.size()}};
      out.update(io::estimate_json(headline));
      out["alternative"] = io::estimate_json(other);
      try {
        const auto report = conductor::conductor_degree(s.spec);
        const long g = conductor::geometric_bound(s.spec.genus_fiber, s.spec.base_genus(), report.f, 0);
        const auto c = nagao::bound_consistency(headline, std::max(0L, g));
        out["bound"] = std::max(0L, g);
        out["consistent"] = !c.flagged;
      } catch (const std::invalid_argument&) {
        out["bound"] = nullptr;  // no conductor data
      }
      manifest.config = {{"surface", surface_arg}, {"p_min", p_min}, {"p_max", p_max},
                         {"estimator", estimator_arg}, {"window", window}};
      emit(common, dump(out), manifest, start);
      std::cerr << s.spec.name << ": " << nagao::to_string(headline.estimator) << " raw "
                << io::format_double(headline.raw) << " -> " << headline.rounded << " (gap "
                << io::format_double(headline.gap) << "), " << nagao::to_string(other.estimator) << " raw "
                << io::format_double(other.raw) << "\n";
      return 0;
    }

    if (cond->parsed()) {
      auto spec = io::load_surface(resolve_surface(surface_arg));
      const auto report = conductor::conductor_degree(spec);
      manifest.config = {{"surface", surface_arg}};
      emit(common, dump(io::conductor_json(spec, report)), manifest, start);
      return 0;
    }

    if (tower->parsed()) {
      towers::CoverSpec spec;
      spec.kind = kind == "a" ? towers::CoverKind::MultiplicationOnEllipticBase : towers::CoverKind::JacobianPullback;
      spec.base_genus = static_cast<int>(g_base);
      spec.galois_index = index;
      const auto rows = towers::tower_bounds(spec, f_base, g_fiber, n_max);
      std::ostringstream csv;
      io::write_tower_csv(csv, rows);
      manifest.config = {{"kind", kind}, {"f_base", f_base}, {"g_base", g_base}, {"g_fiber", g_fiber},
                         {"index", index}, {"n_max", n_max}};
      emit(common, csv.str(), manifest, start);
      std::cerr << "running average at n = " << n_max << ": " << io::format_double(rows.back().running_avg) << "\n";
      return 0;
    }

    if (orbits->parsed()) {
      std::mt19937_64 rng(common.seed);
      towers::OrbitResult r;
      if (mode == "full") {
        r = towers::orbit_count_full(n, rank, budget);
      } else if (mode == "content") {
        r = towers::orbit_count_content(n, rank, rng);
      } else {
        r = towers::burnside_count(towers::general_linear_group(n, rank, budget), n, rng);
      }
      if (common.out.empty()) {
        std::cout << r.count << "\n";
      } else {
        manifest.config = {{"n", n}, {"rank", rank}, {"mode", mode}, {"budget", budget}};
        emit(common, dump(io::orbit_json(r)), manifest, start);
      }
      return 0;
    }

    if (verify->parsed()) {
      bool ok = true;
      json out;
      if (suite == "cover") {
        if (surface_arg.empty()) throw InputError("verify --suite cover needs --surface");
        const auto range = parse_range(primes_arg.empty() ? "5..97" : primes_arg);
        auto s = load();
        if (!s.spec.over_elliptic_base()) throw InputError("verify --suite cover needs a surface over an elliptic base");
        struct Task {
          long n;
          std::uint64_t p;
        };
        std::vector<Task> tasks;
        json skipped = json::array();
        for (long deg : n_list) {
          if (deg < 1) throw InputError("--n must be >= 1");
          for (auto p : arith::primes_in_range(std::max<std::uint64_t>(range.lo, 5), range.hi)) {
            if (s.bad.contains(p) || p % static_cast<std::uint64_t>(deg) == 0) {
              skipped.push_back({{"n", deg}, {"p", p}});
            } else {
              tasks.push_back({deg, p});
            }
          }
        }
        auto reports = util::parallel_map(
            tasks, [&](const Task& t) { return towers::verify_cover_identities(s, t.n, t.p); }, jobs);
        json rows = json::array();
        long failures = 0;
        for (const auto& r : reports) {
          rows.push_back(io::cover_json(r));
          if (!r.ok()) {
            ++failures;
            std::cerr << "FAIL n = " << r.n << ", p = " << r.p << "\n";
          }
        }
        ok = failures == 0;
        out = {{"suite", "cover"}, {"surface", s.spec.name}, {"checked", reports.size()},
               {"failures", failures}, {"skipped", skipped}, {"rows", rows}};
        std::cerr << "cover identities: " << reports.size() - static_cast<std::size_t>(failures) << "/"
                  << reports.size() << " hold\n";
      } else {
        std::mt19937_64 rng(common.seed);
        const long top = n_list.empty() ? 8 : n_list.front();
        json rows = json::array();
        for (long m = 1; m <= top; ++m) {
          auto group = towers::general_linear_group(m, 2);
          const long full = towers::count_orbits(group, m, 2);
          const long content = towers::orbit_count_content(m, 2, rng, 1000).count;
          const long burnside = towers::burnside_count(group, m, rng).count;
          const long d = towers::divisor_count(m);
          const bool row_ok = full == d && content == d && burnside == d;
          ok = ok && row_ok;
          rows.push_back({{"n", m}, {"d_n", d}, {"full", full}, {"content", content}, {"burnside", burnside},
                          {"ok", row_ok}});
        }
        out = {{"suite", "orbits"}, {"rows", rows}};
      }
      manifest.config = {{"suite", suite}, {"surface", surface_arg}, {"n", n_list}, {"primes", primes_arg}};
      emit(common, dump(out), manifest, start);
      return ok ? 0 : kVerificationFailure;
    }
  } catch (const towers::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
