// Acceptance suite: golden values, exhaustive theorem sweeps, and the
// enveloping-algebra oracle, one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "glw/gl_engine.hpp"
#include "glw/mpoly.hpp"
#include "glw/permutation.hpp"
#include "glw/verify.hpp"

using glw::GlEngine;
using glw::MPoly;
using glw::Permutation;

namespace {

Permutation cyc(const std::string& text) {
  return glw::parse_permutation(text, glw::PermNotation::Cycles);
}

MPoly C(int k) { return MPoly::c(k); }
MPoly Np(int e) { return MPoly::n(e); }
MPoly X() { return MPoly::x(); }
MPoly Xm(long long v) { return MPoly::x() - MPoly{v}; }  // x - v

MPoly wgl_k5_printed() {
  MPoly n4 = MPoly{24} * C(2);
  MPoly n3 = MPoly{24} * C(3) - MPoly{50} * C(2) * C(2) - MPoly{24} * C(1) * C(1);
  MPoly n2 = -(MPoly{24} * C(4) + MPoly{10} * C(2) * C(3) - MPoly{35} * pow(C(2), 3) -
               MPoly{70} * C(1) * C(1) * C(2) + MPoly{72} * C(1) * C(2) - MPoly{32} * C(2));
  MPoly n1 = MPoly{10} * C(2) * C(4) + MPoly{96} * C(1) * C(3) - MPoly{10} * pow(C(2), 4) -
             MPoly{50} * pow(C(1), 2) * pow(C(2), 2) + MPoly{30} * C(1) * pow(C(2), 2) -
             MPoly{82} * pow(C(2), 2) - MPoly{20} * pow(C(1), 4) + MPoly{48} * pow(C(1), 3) -
             MPoly{32} * pow(C(1), 2);
  MPoly n0 = MPoly{-40} * C(1) * C(2) * C(3) + pow(C(2), 5) +
             MPoly{10} * pow(C(1), 2) * pow(C(2), 3) + MPoly{30} * pow(C(2), 3) +
             MPoly{15} * pow(C(1), 4) * C(2) - MPoly{20} * pow(C(1), 3) * C(2) +
             MPoly{10} * pow(C(1), 2) * C(2);
  return n4 * Np(4) + n3 * Np(3) + n2 * Np(2) + n1 * Np(1) + n0;
}

MPoly chromatic_k3_printed() {
  return X() * Xm(1) * Xm(2) +
         X() * Xm(1) * (MPoly{3} * X() - MPoly{5}) * Np(-2) +
         MPoly{2} * X() * Xm(1) * (MPoly{3} * X() - MPoly{2}) * Np(-4) +
         X() * Xm(1) * (MPoly{5} * X() - MPoly{1}) * Np(-6) +
         X() * X() * (MPoly{2} * X() - MPoly{1}) * Np(-8);
}

MPoly chromatic_k5_printed() {
  MPoly q2 = MPoly{5} * pow(X(), 3) - MPoly{20} * pow(X(), 2) + MPoly{25} * X() - MPoly{16};
  MPoly q4 = MPoly{15} * pow(X(), 3) - MPoly{40} * pow(X(), 2) + MPoly{58} * X() - MPoly{32};
  return X() * Xm(1) * Xm(2) * Xm(3) * Xm(4) + MPoly{2} * X() * Xm(1) * q2 * Np(-2) +
         X() * X() * q4 * Np(-4);
}

struct Criterion {
  std::string id;
  std::string what;
  double budget_seconds;  // 0 = no stated budget
  std::function<bool(GlEngine&, std::string&)> run;
};

bool expect_eq(const MPoly& got, const MPoly& want, const std::string& label,
               std::string& detail) {
  if (got == want) return true;
  detail = label + ": got " + got.to_text() + "; want " + want.to_text();
  return false;
}

bool run_suites(const std::vector<std::pair<std::string, int>>& suites, GlEngine& engine,
                std::string& detail) {
  for (const auto& [name, bound] : suites) {
    glw::SuiteResult r = glw::run_suite(name, bound, 12345, engine);
    if (!r.pass) {
      detail = name + "(" + std::to_string(bound) + "): " + r.counterexample;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const Permutation k5 = cyc("(1 6)(2 7)(3 8)(4 9)(5 10)");
  const Permutation k3 = cyc("(1 3 5 8 10)(2 4 7)(6 9 11)");

  std::vector<Criterion> criteria;
  criteria.push_back({"1a", "wgl((1 3 2)) golden", 1.0, [](GlEngine& e, std::string& d) {
                        return expect_eq(e.wgl(cyc("(1 3 2)")),
                                         C(3) + C(1) * C(1) - Np(1) * C(2), "wgl(1 3 2)", d);
                      }});
  criteria.push_back({"1b", "wgl(K5 chord diagram) golden", 10.0,
                      [&](GlEngine& e, std::string& d) {
                        return expect_eq(e.wgl(k5), wgl_k5_printed(), "wgl(K5)", d);
                      }});
  criteria.push_back(
      {"1c", "five chromatic-substitution goldens", 30.0, [&](GlEngine& e, std::string& d) {
         return expect_eq(e.chromatic_substitution(k3), chromatic_k3_printed(), "X(K3 perm)", d) &&
                expect_eq(e.chromatic_substitution(k5), chromatic_k5_printed(), "X(K5)", d) &&
                expect_eq(e.chromatic_substitution(cyc("(1 3 5 2 4)")),
                          X() * Xm(1) * Np(-2) + X() * X() * Np(-4), "X((1 3 5 2 4))", d) &&
                expect_eq(e.chromatic_substitution(cyc("(1 3 2)")), X() * X() * Np(-2),
                          "X((1 3 2))", d) &&
                expect_eq(e.chromatic_substitution(cyc("(1 2 3 6 5 4)")), X() * X() * Np(-2),
                          "X((1 2 3 6 5 4))", d);
       }});
  criteria.push_back({"2a", "specializations N^(f-1), N^(m+c), x^c for m <= 6", 120.0,
                      [](GlEngine& e, std::string& d) {
                        return run_suites({{"specializations", 6}}, e, d);
                      }});
  criteria.push_back({"2b", "X-parity and the three X reductions at all pivots, m <= 6", 0.0,
                      [](GlEngine& e, std::string& d) {
                        return run_suites({{"gl-type", 6}}, e, d);
                      }});
  criteria.push_back({"2c", "Hopf homomorphism and Xi case identities, m <= 6", 0.0,
                      [](GlEngine& e, std::string& d) {
                        return run_suites({{"hopf-hom", 6}, {"xi-cases", 6}}, e, d);
                      }});
  criteria.push_back({"2d", "chromatic coincidence: positives m <= 8 and chords", 300.0,
                      [](GlEngine& e, std::string& d) {
                        return run_suites({{"chromatic", 8}}, e, d);
                      }});
  criteria.push_back({"2e", "zero free term on nonpositive permutations, m <= 7", 0.0,
                      [](GlEngine& e, std::string& d) {
                        return run_suites({{"free-term", 7}}, e, d);
                      }});
  criteria.push_back({"2f", "cyclic x0 binomial formula and p1 vanishing, m <= 7", 0.0,
                      [](GlEngine& e, std::string& d) {
                        return run_suites({{"cyclic-x0", 7}}, e, d);
                      }});
  criteria.push_back({"2g", "degree bound for nonpositive long cycles, m <= 7", 0.0,
                      [](GlEngine& e, std::string& d) {
                        return run_suites({{"degree-bound", 7}}, e, d);
                      }});
  criteria.push_back({"2h", "divisibility by x(x-1) and the distinguished coefficient, m <= 6",
                      0.0, [](GlEngine& e, std::string& d) {
                        return run_suites({{"divisibility", 6}}, e, d);
                      }});
  criteria.push_back({"2i", "successor reduction, m <= 6", 0.0,
                      [](GlEngine& e, std::string& d) {
                        return run_suites({{"successor", 6}}, e, d);
                      }});
  criteria.push_back({"3", "enveloping-algebra oracle, m <= 4, n in {2,3}", 120.0,
                      [](GlEngine& e, std::string& d) {
                        return run_suites({{"pbw", 4}}, e, d);
                      }});

  GlEngine engine;
  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(engine, detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = c.budget_seconds == 0.0 || secs < c.budget_seconds;
    if (ok && !in_budget) detail = "exceeded budget of " + std::to_string(c.budget_seconds) + " s";
    bool pass = ok && in_budget;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.what << "  ["
              << std::fixed << std::setprecision(2) << secs << " s]\n";
    if (!pass) {
      std::cout << "      " << detail << '\n';
      ++failures;
    }
  }
  std::cout << (failures ? "ACCEPTANCE: FAIL (" + std::to_string(failures) + " criteria)"
                         : "ACCEPTANCE: PASS")
            << '\n';
  return failures == 0 ? 0 : 1;
}
