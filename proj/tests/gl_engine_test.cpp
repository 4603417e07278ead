#include <doctest.h>

#include <sstream>
#include <thread>

#include "glw/canonical.hpp"
#include "glw/gl_engine.hpp"

using glw::GlEngine;
using glw::MPoly;
using glw::Permutation;
using glw::PermNotation;
using glw::PivotKind;
using glw::Var;

namespace {

Permutation cyc(const std::string& text) {
  return glw::parse_permutation(text, PermNotation::Cycles);
}

MPoly inverse_cycle3_value() {
  return MPoly::c(3) + MPoly::c(1) * MPoly::c(1) - MPoly::n() * MPoly::c(2);
}

}  // namespace

TEST_CASE("pivot: join case") {
  auto step = glw::pivot(cyc("(1 3)(2 4)"), 2);
  CHECK(step.kind == PivotKind::Join);
  CHECK(step.alpha_prime == cyc("(1 2)(3 4)"));
  CHECK(step.beta1.perm == cyc("(1 3 2)"));
  CHECK(step.beta1.scalar == MPoly{1});
  CHECK(step.beta2.perm == cyc("(1 2 3)"));
  CHECK(step.beta2.scalar == MPoly{1});
}

TEST_CASE("pivot: cut0 case at both legal positions") {
  for (int l : {1, 2}) {
    auto step = glw::pivot(cyc("(1 3 2)"), l);
    CHECK(step.kind == PivotKind::Cut0);
    CHECK(step.alpha_prime == cyc("(1 2 3)"));
    CHECK(step.beta1.scalar == MPoly::c(1));
    CHECK(step.beta1.perm == Permutation::identity(1));
    CHECK(step.beta2.scalar == MPoly::n());
    CHECK(step.beta2.perm == cyc("(1 2)"));
  }
}

TEST_CASE("pivot: swapping two fixed points changes nothing") {
  auto step = glw::pivot(Permutation::identity(2), 1);
  CHECK(step.kind == PivotKind::Join);
  CHECK(step.alpha_prime == Permutation::identity(2));
  CHECK(step.beta1.perm == step.beta2.perm);
  CHECK(step.beta1.scalar == step.beta2.scalar);
}

TEST_CASE("pivot: cut case exists and splits the cycle") {
  // (1 3 5 2 4): positions 2,3 lie in the one cycle and are not adjacent on it.
  Permutation a = cyc("(1 3 5 2 4)");
  auto step = glw::pivot(a, 2);
  CHECK(step.kind == PivotKind::Cut);
  CHECK(glw::cycle_count(step.beta1.perm) == 2);
  CHECK(glw::cycle_count(step.beta2.perm) == 2);
  CHECK(glw::cycle_count(step.alpha_prime) == 1);
}

TEST_CASE("pivot: errors") {
  CHECK_THROWS_AS(glw::pivot(cyc("(1 2)"), 1), std::invalid_argument);  // a(l) = l+1
  CHECK_THROWS_AS(glw::pivot(cyc("(1 3 2)"), 0), std::invalid_argument);
  CHECK_THROWS_AS(glw::pivot(cyc("(1 3 2)"), 3), std::invalid_argument);
}

TEST_CASE("pivot position rule") {
  CHECK(glw::pivot_position(cyc("(1 3 2)")) == 2);
  CHECK(glw::pivot_position(cyc("(1 3)(2 4)")) == 2);
  CHECK(!glw::pivot_position(glw::standard_cycle(5)).has_value());
  CHECK(!glw::pivot_position(cyc("(1 2)(3 4 5)")).has_value());
  CHECK(!glw::pivot_position(Permutation::identity(4)).has_value());
}

TEST_CASE("weight system base cases") {
  GlEngine engine;
  CHECK(engine.wgl(Permutation{}) == MPoly{1});
  for (int k = 1; k <= 6; ++k) CHECK(engine.wgl(glw::standard_cycle(k)) == MPoly::c(k));
  CHECK(engine.wgl(Permutation::identity(3)) == MPoly::c(1) * MPoly::c(1) * MPoly::c(1));
}

TEST_CASE("weight system worked examples") {
  GlEngine engine;
  CHECK(engine.wgl(cyc("(1 3 2)")) == inverse_cycle3_value());
  CHECK(engine.wgl(cyc("(1 3)(2 4)")) ==
        MPoly::c(2) * MPoly::c(2) + MPoly::c(1) * MPoly::c(1) - MPoly::n() * MPoly::c(2));
}

TEST_CASE("weight system is a class function and multiplicative") {
  GlEngine engine;
  for (int m = 0; m <= 6; ++m)
    for (const auto& a : glw::enumerate_permutations(glw::EnumKind::All, m)) {
      CHECK(engine.wgl(glw::cyclic_shift(a)) == engine.wgl(a));
    }
  for (int ma = 0; ma <= 6; ++ma)
    for (int mb = 0; ma + mb <= 6; ++mb)
      for (const auto& a : glw::enumerate_permutations(glw::EnumKind::All, ma))
        for (const auto& b : glw::enumerate_permutations(glw::EnumKind::All, mb))
          CHECK(engine.wgl(glw::concat(a, b)) == engine.wgl(a) * engine.wgl(b));
}

TEST_CASE("prechromatic values") {
  GlEngine engine;
  CHECK(engine.prechromatic(cyc("(1 2)")) == MPoly::p(2));
  for (int m = 1; m <= 6; ++m) CHECK(engine.prechromatic(glw::standard_cycle(m)) == MPoly::p(m));
  CHECK(engine.prechromatic(cyc("(1 3)(2 4)")) ==
        MPoly::p(2) * MPoly::p(2) - MPoly::p(2) + MPoly::p(1) * MPoly::p(1) * MPoly::n(-2));
  CHECK(engine.prechromatic(cyc("(1 3 2)")) ==
        MPoly::p(3) - MPoly::p(2) + MPoly::p(1) * MPoly::p(1) * MPoly::n(-2));
  CHECK(engine.prechromatic(Permutation{}) == MPoly{1});
}

TEST_CASE("expansion coefficients") {
  GlEngine engine;
  CHECK(engine.x_coeff(cyc("(1 3 2)"), 0) == MPoly::p(3) - MPoly::p(2));
  CHECK(engine.x_coeff(cyc("(1 3)(2 4)"), 1) == MPoly::p(1) * MPoly::p(1));
  CHECK(engine.x0(cyc("(1 3)(2 4)")) == MPoly::p(2) * MPoly::p(2) - MPoly::p(2));
  for (int m = 1; m <= 5; ++m) CHECK(engine.x0(glw::standard_cycle(m)) == MPoly::p(m));
  CHECK_THROWS_AS(engine.x_coeff(cyc("(1 2)"), -1), std::invalid_argument);

  // x0 is multiplicative over concatenation.
  for (const auto& a : glw::enumerate_permutations(glw::EnumKind::All, 3))
    for (const auto& b : glw::enumerate_permutations(glw::EnumKind::All, 3))
      CHECK(engine.x0(glw::concat(a, b)) == engine.x0(a) * engine.x0(b));
}

TEST_CASE("chromatic substitution golden values at small size") {
  GlEngine engine;
  MPoly x = MPoly::x();
  CHECK(engine.chromatic_substitution(cyc("(1 3 2)")) == x * x * MPoly::n(-2));
  CHECK(engine.chromatic_substitution(cyc("(1 3 5 2 4)")) ==
        x * (x - MPoly{1}) * MPoly::n(-2) + x * x * MPoly::n(-4));
  CHECK(glw::min_degree_in_n(engine.chromatic_substitution(cyc("(1 3 5 2 4)"))) == -4);
  CHECK(engine.chromatic_substitution(cyc("(1 2 3 6 5 4)")) == x * x * MPoly::n(-2));
  CHECK(engine.chromatic_substitution(Permutation{}) == MPoly{1});
}

TEST_CASE("monomial specializations") {
  GlEngine engine;
  CHECK(engine.specialize(cyc("(1 3)(2 4)"), glw::SpecialRule::Faces) == MPoly{1});
  CHECK(glw::faces(cyc("(1 3)(2 4)")) == 1);
  CHECK(engine.specialize(cyc("(1 3 2)"), glw::SpecialRule::Shifted) == MPoly::n(4));
  CHECK(engine.specialize(cyc("(1 2)(3 4)"), glw::SpecialRule::CycleCount) ==
        MPoly::var(Var::x(), 2));
}

TEST_CASE("memo cache persistence") {
  GlEngine engine;
  MPoly v = engine.wgl(cyc("(1 3 2)"));
  CHECK(engine.cache_size() > 0);
  std::stringstream buf;
  engine.save_cache(buf);

  GlEngine fresh;
  fresh.load_cache(buf);
  CHECK(fresh.cache_size() == engine.cache_size());
  CHECK(fresh.wgl(cyc("(1 3 2)")) == v);

  std::stringstream bad("{\"version\":2,\"entries\":[]}");
  GlEngine other;
  CHECK_THROWS_AS(other.load_cache(bad), std::invalid_argument);
  std::stringstream garbage("not json");
  CHECK_THROWS_AS(other.load_cache(garbage), std::invalid_argument);
}

TEST_CASE("concurrent evaluation agrees with serial") {
  GlEngine serial;
  MPoly expected = serial.wgl(cyc("(1 4 2 5 3)"));
  GlEngine shared;
  std::vector<std::thread> workers;
  std::vector<MPoly> got(4);
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&shared, &got, t] { got[static_cast<size_t>(t)] = shared.wgl(cyc("(1 4 2 5 3)")); });
  for (auto& w : workers) w.join();
  for (const auto& v : got) CHECK(v == expected);
}
