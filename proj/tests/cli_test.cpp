#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "glw/mpoly.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the CLI under /bin/sh; GLW_CLI points at the built binary.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  const char* cli = std::getenv("GLW_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "GLW_CLI must point at the glw binary");
  std::string cmd = env + " " + std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli wgl prints the worked example") {
  auto r = run_cli("wgl \"(1 3 2)\"");
  CHECK(r.code == 0);
  CHECK(r.out == "C3 + C1^2 - N*C2\n");
}

TEST_CASE("cli substitutions") {
  auto chrom = run_cli("wgl \"(1 3 2)\" --substitute chromatic");
  CHECK(chrom.code == 0);
  CHECK(chrom.out == "x^2*N^-2\n");

  auto empty = run_cli("wgl \"\"");
  CHECK(empty.code == 0);
  CHECK(empty.out == "1\n");

  auto coeff = run_cli("wgl \"(1 3)(2 4)\" --substitute prechromatic --coeff-n=-2");
  CHECK(coeff.code == 0);
  CHECK(coeff.out == "p1^2\n");

  auto one_line = run_cli("wgl 3,1,2 --one-line");
  CHECK(one_line.code == 0);
  CHECK(one_line.out == "C3 + C1^2 - N*C2\n");

  auto json = run_cli("wgl \"(1 2)\" --json");
  CHECK(json.code == 0);
  CHECK(glw::MPoly::from_json(json.out) == glw::MPoly::c(2));

  CHECK(run_cli("wgl \"(1 3 2)\" --substitute nope").code == 2);
}

TEST_CASE("cli parse and usage errors") {
  CHECK(run_cli("wgl \"(1 1)\"").code == 2);
  CHECK(run_cli("wgl \"(1 3\"").code == 2);
  CHECK(run_cli("nosuchcommand").code == 2);
  CHECK(run_cli("verify nosuchsuite 3").code == 2);
  CHECK(run_cli("").code == 2);
}

TEST_CASE("cli info") {
  auto r = run_cli("info \"(1 3)(2 4)\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("m: 4\n") != std::string::npos);
  CHECK(r.out.find("c: 2\n") != std::string::npos);
  CHECK(r.out.find("ascents: 2\n") != std::string::npos);
  CHECK(r.out.find("positive: true\n") != std::string::npos);
  CHECK(r.out.find("faces: 1\n") != std::string::npos);
  CHECK(r.out.find("canonical: (1 3)(2 4)\n") != std::string::npos);
  CHECK(r.out.find("\"edges\":[[1,2]]") != std::string::npos);
  CHECK(r.out.find("\"weights\":[2,2]") != std::string::npos);
}

TEST_CASE("cli verify") {
  auto ok = run_cli("verify specializations 3");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  auto pbw = run_cli("verify pbw 2 --seed 7");
  CHECK(pbw.code == 0);
}

TEST_CASE("cli cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "glw-cache-test";
  std::filesystem::remove_all(dir);
  std::string env = "GLW_CACHE_DIR=" + dir.string();
  auto first = run_cli("wgl \"(1 3 2)\"", env);
  CHECK(first.code == 0);
  auto cache_file = dir / "wgl-cache.json";
  CHECK(std::filesystem::exists(cache_file));
  auto second = run_cli("wgl \"(1 3 2)\"", env);
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  // A corrupt cache is ignored, not fatal.
  std::ofstream(cache_file) << "garbage";
  auto third = run_cli("wgl \"(1 3 2)\"", env);
  CHECK(third.code == 0);
  CHECK(third.out == first.out);
  std::filesystem::remove_all(dir);
}
