// Command-line front end: weight-system values, permutation reports, and the
// verification sweeps. Exit codes: 0 success, 1 verification/computation
// failure, 2 usage or parse errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "glw/canonical.hpp"
#include "glw/chromatic.hpp"
#include "glw/gl_engine.hpp"
#include "glw/graph.hpp"
#include "glw/hopf.hpp"
#include "glw/mpoly.hpp"
#include "glw/pbw.hpp"
#include "glw/permutation.hpp"
#include "glw/verify.hpp"

namespace {

std::optional<std::filesystem::path> cache_path() {
  const char* dir = std::getenv("GLW_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / "wgl-cache.json";
}

void load_cache(glw::GlEngine& engine) {
  auto path = cache_path();
  if (!path) return;
  std::ifstream in(*path);
  if (!in) return;
  try {
    engine.load_cache(in);
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring cache " << *path << ": " << e.what() << '\n';
  }
}

void save_cache(const glw::GlEngine& engine) {
  auto path = cache_path();
  if (!path) return;
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  std::ofstream out(*path);
  if (!out) {
    std::cerr << "warning: cannot write cache " << *path << '\n';
    return;
  }
  engine.save_cache(out);
}

struct WglOptions {
  std::string perm_text;
  bool one_line = false;
  std::string substitute;
  std::optional<int> coeff_n;
  bool json = false;
};

int cmd_wgl(const WglOptions& opt) {
  glw::Permutation a = glw::parse_permutation(
      opt.perm_text, opt.one_line ? glw::PermNotation::OneLine : glw::PermNotation::Cycles);
  glw::GlEngine engine;
  load_cache(engine);
  glw::MPoly value;
  if (opt.substitute.empty()) {
    value = engine.wgl(a);
  } else if (opt.substitute == "prechromatic") {
    value = engine.prechromatic(a);
  } else if (opt.substitute == "chromatic") {
    value = engine.chromatic_substitution(a);
  } else if (opt.substitute == "faces") {
    value = engine.specialize(a, glw::SpecialRule::Faces);
  } else if (opt.substitute == "shifted") {
    value = engine.specialize(a, glw::SpecialRule::Shifted);
  } else if (opt.substitute == "cyclecount") {
    value = engine.specialize(a, glw::SpecialRule::CycleCount);
  } else {
    std::cerr << "unknown substitution '" << opt.substitute
              << "' (expected prechromatic|chromatic|faces|shifted|cyclecount)\n";
    return 2;
  }
  if (opt.coeff_n) value = glw::coeff_in_n(value, *opt.coeff_n);
  std::cout << (opt.json ? value.to_json() : value.to_text()) << '\n';
  save_cache(engine);
  return 0;
}

int cmd_info(const std::string& perm_text, bool one_line) {
  glw::Permutation a = glw::parse_permutation(
      perm_text, one_line ? glw::PermNotation::OneLine : glw::PermNotation::Cycles);
  std::cout << "m: " << a.size() << '\n';
  std::cout << "one-line: " << glw::format_permutation(a, glw::PermNotation::OneLine) << '\n';
  std::cout << "cycles: " << glw::format_permutation(a, glw::PermNotation::Cycles) << '\n';
  std::cout << "c: " << glw::cycle_count(a) << '\n';
  std::cout << "ascents: " << glw::ascents(a) << '\n';
  std::cout << "positive: " << (glw::is_positive(a) ? "true" : "false") << '\n';
  std::cout << "faces: " << glw::faces(a) << '\n';
  std::cout << "canonical: "
            << glw::format_permutation(glw::canonical_form(a).perm(), glw::PermNotation::Cycles)
            << '\n';
  std::cout << "factors:";
  for (const auto& f : glw::connected_factors(a))
    std::cout << ' ' << glw::format_permutation(f, glw::PermNotation::Cycles);
  std::cout << '\n';
  std::cout << "intersection_graph: " << glw::graph_to_json(glw::intersection_graph(a)) << '\n';
  std::cout << "weighted_intersection_graph: "
            << glw::graph_to_json(glw::weighted_intersection_graph(a)) << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> bound, unsigned seed) {
  glw::GlEngine engine;
  load_cache(engine);
  int b = bound ? *bound : glw::default_bound(suite);
  glw::SuiteResult r = glw::run_suite(suite, b, seed, engine);
  std::cout << "suite=" << r.suite << " bound=" << r.bound << " checked=" << r.checked << " "
            << (r.pass ? "PASS" : "FAIL") << '\n';
  if (!r.pass) std::cout << "counterexample: " << r.counterexample << '\n';
  save_cache(engine);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact universal gl-weight system on permutations"};
  app.require_subcommand(1);

  WglOptions wopt;
  auto* wgl = app.add_subcommand("wgl", "Evaluate the weight system on a permutation");
  wgl->add_option("perm", wopt.perm_text,
                  "Permutation, e.g. \"(1 3 2)\" or \"m=5 (1 3)\"; empty for the unit")
      ->required();
  wgl->add_flag("--one-line", wopt.one_line, "Read the permutation as comma-separated images");
  wgl->add_option("--substitute", wopt.substitute,
                  "prechromatic|chromatic|faces|shifted|cyclecount");
  int coeff_val = 0;
  auto* coeff_opt = wgl->add_option("--coeff-n", coeff_val, "Extract the coefficient of N^j");
  wgl->add_flag("--json", wopt.json, "Print the polynomial as JSON");

  std::string info_perm;
  bool info_one_line = false;
  auto* info = app.add_subcommand("info", "Report the statistics of a permutation");
  info->add_option("perm", info_perm, "Permutation text")->required();
  info->add_flag("--one-line", info_one_line, "Read the permutation as comma-separated images");

  std::string suite;
  std::optional<int> bound;
  unsigned seed = 12345;
  int bound_val = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("suite", suite, "One of the named suites")->required();
  auto* bound_opt =
      verify->add_option("bound", bound_val, "Element-count bound (default: acceptance bound)");
  verify->add_option("--seed", seed, "Seed for randomized corpora");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (wgl->parsed()) {
      if (coeff_opt->count()) wopt.coeff_n = coeff_val;
      return cmd_wgl(wopt);
    }
    if (info->parsed()) return cmd_info(info_perm, info_one_line);
    if (verify->parsed()) {
      if (bound_opt->count()) bound = bound_val;
      return cmd_verify(suite, bound, seed);
    }
  } catch (const glw::ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
