#pragma once

#include <string>
#include <vector>

#include "glw/gl_engine.hpp"

namespace glw {

struct SuiteResult {
  std::string suite;
  int bound = 0;
  bool pass = false;
  long long checked = 0;      // individual identities tested
  std::string counterexample; // first failure, empty when pass
};

// Suites: gl-type, specializations, hopf-hom, chromatic, free-term,
// cyclic-x0, degree-bound, divisibility, successor, xi-cases, pbw,
// graph-hopf. Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, int bound, unsigned seed, GlEngine& engine);

const std::vector<std::string>& suite_names();
int default_bound(const std::string& name);

}  // namespace glw
