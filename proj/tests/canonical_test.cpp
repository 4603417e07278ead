#include <doctest.h>

#include <set>

#include "glw/canonical.hpp"
#include "glw/gl_engine.hpp"

using glw::canonical_form;
using glw::ClassKey;
using glw::class_less;
using glw::Permutation;
using glw::PermNotation;

namespace {

Permutation cyc(const std::string& text) {
  return glw::parse_permutation(text, PermNotation::Cycles);
}

}  // namespace

TEST_CASE("all shifts collapse to one key") {
  Permutation a = cyc("(1 3)(2 4)");
  ClassKey key = canonical_form(a);
  Permutation s = a;
  for (int t = 0; t < a.size(); ++t) {
    s = glw::cyclic_shift(s);
    CHECK(canonical_form(s) == key);
  }
  for (int m = 0; m <= 6; ++m)
    for (const auto& p : glw::enumerate_permutations(glw::EnumKind::All, m))
      CHECK(canonical_form(glw::cyclic_shift(p)) == canonical_form(p));
}

TEST_CASE("factor order does not matter") {
  for (const auto& a : glw::enumerate_permutations(glw::EnumKind::All, 3))
    for (const auto& b : glw::enumerate_permutations(glw::EnumKind::All, 3))
      CHECK(canonical_form(glw::concat(a, b)) == canonical_form(glw::concat(b, a)));
}

TEST_CASE("grouped factors shift as a unit") {
  // (1)(2 4)(3) is concat((1), (1 3)(2)) whose right block is a shifted
  // (1)(2 3); it must land in the class of (1)(2)(3 4).
  CHECK(canonical_form(cyc("(1)(2 4)(3)")) == canonical_form(cyc("(1)(2)(3 4)")));
  CHECK(canonical_form(cyc("(1 3)(2)(4)")) == canonical_form(cyc("(1)(2)(3 4)")));
}

TEST_CASE("canonical form is idempotent and shift-minimal") {
  for (int m = 0; m <= 6; ++m)
    for (const auto& p : glw::enumerate_permutations(glw::EnumKind::All, m)) {
      ClassKey key = canonical_form(p);
      CHECK(canonical_form(key.perm()) == key);
      // The canonical word is minimal over the whole class.
      for (const auto& q : glw::equivalence_class(p)) {
        CHECK(canonical_form(q) == key);
        CHECK((glw::cycles(key.perm()).cycles <= glw::cycles(q).cycles));
      }
    }
  for (int m = 1; m <= 7; ++m) CHECK(canonical_form(glw::standard_cycle(m)).perm() == glw::standard_cycle(m));
}

TEST_CASE("class order basics") {
  ClassKey s3 = canonical_form(glw::standard_cycle(3));
  ClassKey inv3 = canonical_form(cyc("(1 3 2)"));
  CHECK(class_less(s3, inv3));
  CHECK(!class_less(inv3, s3));
  CHECK(!class_less(s3, s3));
  ClassKey any2 = canonical_form(cyc("(1 2)"));
  CHECK(class_less(any2, s3));
  CHECK(class_less(any2, inv3));
  CHECK(class_less(canonical_form(Permutation{}), any2));
}

TEST_CASE("class order is a strict total order per size") {
  for (int m = 0; m <= 5; ++m) {
    std::set<std::vector<int>> seen;
    std::vector<ClassKey> keys;
    for (const auto& p : glw::enumerate_permutations(glw::EnumKind::All, m)) {
      ClassKey k = canonical_form(p);
      if (seen.insert(k.perm().images()).second) keys.push_back(k);
    }
    for (const auto& a : keys)
      for (const auto& b : keys) {
        if (a == b) {
          CHECK(!class_less(a, b));
        } else {
          CHECK(class_less(a, b) != class_less(b, a));
        }
      }
    for (const auto& a : keys)
      for (const auto& b : keys)
        for (const auto& c : keys)
          if (class_less(a, b) && class_less(b, c)) CHECK(class_less(a, c));
  }
}

TEST_CASE("equivalence classes partition the symmetric group") {
  for (int m = 0; m <= 6; ++m) {
    auto all = glw::enumerate_permutations(glw::EnumKind::All, m);
    std::set<Permutation> covered;
    size_t class_total = 0;
    std::set<std::vector<int>> reps;
    for (const auto& p : all) {
      if (!reps.insert(canonical_form(p).perm().images()).second) continue;
      auto members = glw::equivalence_class(p);
      class_total += members.size();
      for (const auto& q : members) {
        CHECK(covered.insert(q).second);  // classes are disjoint
      }
    }
    CHECK(class_total == all.size());
  }
}

TEST_CASE("pivot reductions strictly descend") {
  // The same-size term of every engine reduction is a smaller class; the
  // engine throws if this ever fails, but check it directly.
  for (int m = 1; m <= 6; ++m)
    for (const auto& p : glw::enumerate_permutations(glw::EnumKind::All, m)) {
      ClassKey key = canonical_form(p);
      const Permutation& rep = key.perm();
      auto l = glw::pivot_position(rep);
      if (!l) continue;
      auto step = glw::pivot(rep, *l);
      CHECK(class_less(canonical_form(step.alpha_prime), key));
    }
}
