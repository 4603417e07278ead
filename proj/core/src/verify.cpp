#include "glw/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "glw/chromatic.hpp"
#include "glw/graph.hpp"
#include "glw/hopf.hpp"
#include "glw/pbw.hpp"

namespace glw {

namespace {

struct Sweep {
  SuiteResult result;

  explicit Sweep(std::string name, int bound) {
    result.suite = std::move(name);
    result.bound = bound;
    result.pass = true;
  }

  // Returns false once a counterexample has been recorded, so sweeps can
  // stop early.
  bool check(bool ok, const std::function<std::string()>& describe) {
    if (!result.pass) return false;
    ++result.checked;
    if (!ok) {
      result.pass = false;
      result.counterexample = describe();
    }
    return result.pass;
  }
  bool alive() const { return result.pass; }
};

std::string perm_text(const Permutation& a) {
  return a.size() == 0 ? "<empty>" : format_permutation(a, PermNotation::Cycles);
}

std::string sides(const MPoly& lhs, const MPoly& rhs) {
  return "lhs = " + lhs.to_text() + "; rhs = " + rhs.to_text();
}

template <typename F>
void for_all_perms(int lo, int bound, F&& visit) {
  for (int m = lo; m <= bound; ++m)
    for (const auto& a : enumerate_permutations(EnumKind::All, m))
      if (!visit(a)) return;
}

template <typename F>
void for_all_legal_pivots(const Permutation& a, F&& visit) {
  for (int l = 1; l < a.size(); ++l) {
    if (a(l) == l + 1) continue;
    if (!visit(l)) return;
  }
}

MPoly faces_rule(const MPoly& s) {
  std::map<Var, MPoly> rule;
  for (Var v : s.variables())
    if (v.kind == Var::Kind::C) rule.emplace(v, MPoly::n(v.index - 1));
  return s.substitute(rule);
}

SuiteResult suite_gl_type(int bound, GlEngine& engine) {
  Sweep sw("gl-type", bound);
  for_all_perms(0, bound, [&](const Permutation& a) {
    // Parity of the prechromatic expansion.
    MPoly xa = engine.prechromatic(a);
    bool parity = true;
    for (const auto& [mono, c] : xa.terms()) {
      int e = mono.exponent(Var::n());
      if (e > 0 || e % 2 != 0) parity = false;
    }
    sw.check(parity, [&] { return perm_text(a) + ": odd or positive power of N in X"; });
    for_all_legal_pivots(a, [&](int l) {
      PivotOutcome step = pivot(a, l);
      auto where = [&] { return perm_text(a) + " at l=" + std::to_string(l); };
      // The face count is gl-type: the left pair (alpha, beta1) and the
      // right pair (alpha', beta2) carry equal face monomials, scalars
      // included.
      MPoly fa = MPoly::n(faces(a) - 1);
      MPoly fb1 = faces_rule(step.beta1.scalar) * MPoly::n(faces(step.beta1.perm) - 1);
      sw.check(fa == fb1, [&] { return where() + ": left face pair; " + sides(fa, fb1); });
      MPoly fap = MPoly::n(faces(step.alpha_prime) - 1);
      MPoly fb2 = faces_rule(step.beta2.scalar) * MPoly::n(faces(step.beta2.perm) - 1);
      sw.check(fap == fb2, [&] { return where() + ": right face pair; " + sides(fap, fb2); });
      MPoly lhs = fa;
      MPoly rhs = fap + fb1 - fb2;
      sw.check(lhs == rhs, [&] { return where() + ": N^(f-1) recurrence; " + sides(lhs, rhs); });
      // The three reductions of X at this pivot.
      MPoly xl = engine.prechromatic(a);
      MPoly xr;
      switch (step.kind) {
        case PivotKind::Join:
          xr = engine.prechromatic(step.alpha_prime) + engine.prechromatic(step.beta1.perm) -
               engine.prechromatic(step.beta2.perm);
          break;
        case PivotKind::Cut:
          xr = engine.prechromatic(step.alpha_prime) +
               MPoly::n(-2) * (engine.prechromatic(step.beta1.perm) -
                               engine.prechromatic(step.beta2.perm));
          break;
        case PivotKind::Cut0:
          xr = engine.prechromatic(step.alpha_prime) +
               MPoly::p(1) * MPoly::n(-2) * engine.prechromatic(step.beta1.perm) -
               engine.prechromatic(step.beta2.perm);
          break;
      }
      return sw.check(xl == xr, [&] { return where() + ": X recurrence; " + sides(xl, xr); });
    });
    return sw.alive();
  });
  return sw.result;
}

SuiteResult suite_specializations(int bound, GlEngine& engine) {
  Sweep sw("specializations", bound);
  for_all_perms(0, bound, [&](const Permutation& a) {
    MPoly f = engine.specialize(a, SpecialRule::Faces);
    MPoly ef = MPoly::n(faces(a) - 1);
    sw.check(f == ef, [&] { return perm_text(a) + ": faces; " + sides(f, ef); });
    MPoly s = engine.specialize(a, SpecialRule::Shifted);
    MPoly es = MPoly::n(a.size() + cycle_count(a));
    sw.check(s == es, [&] { return perm_text(a) + ": shifted; " + sides(s, es); });
    MPoly c = engine.specialize(a, SpecialRule::CycleCount);
    MPoly ec = MPoly::var(Var::x(), cycle_count(a));
    return sw.check(c == ec, [&] { return perm_text(a) + ": cyclecount; " + sides(c, ec); });
  });
  return sw.result;
}

SuiteResult suite_hopf_hom(int bound, GlEngine& engine) {
  Sweep sw("hopf-hom", bound);
  for_all_perms(0, bound, [&](const Permutation& a) {
    return sw.check(check_hopf_hom(engine, a),
                    [&] { return perm_text(a) + ": Xi != primitive substitution of x0"; });
  });
  return sw.result;
}

SuiteResult suite_xi_cases(int bound, GlEngine& engine) {
  Sweep sw("xi-cases", bound);
  for_all_perms(0, bound, [&](const Permutation& a) {
    for_all_legal_pivots(a, [&](int l) {
      return sw.check(lemma_xi_cases(engine, a, l), [&] {
        return perm_text(a) + " at l=" + std::to_string(l) + ": Xi case identity";
      });
    });
    return sw.alive();
  });
  return sw.result;
}

MPoly substitute_p_to_x(const MPoly& poly) {
  std::map<Var, MPoly> rule;
  for (Var v : poly.variables())
    if (v.kind == Var::Kind::P) rule.emplace(v, MPoly::x());
  return poly.substitute(rule);
}

SuiteResult suite_chromatic(int bound, GlEngine& engine) {
  Sweep sw("chromatic", bound);
  auto check_one = [&](const Permutation& a) {
    MPoly lhs = substitute_p_to_x(engine.x0(a));
    MPoly rhs = chromatic_polynomial(intersection_graph(a));
    return sw.check(lhs == rhs, [&] { return perm_text(a) + ": " + sides(lhs, rhs); });
  };
  for (int m = 0; m <= bound && sw.alive(); ++m)
    for (const auto& a : enumerate_permutations(EnumKind::Positive, m))
      if (!check_one(a)) break;
  for (int m = 0; m <= bound && sw.alive(); m += 2)
    for (const auto& a : enumerate_permutations(EnumKind::Chord, m))
      if (!check_one(a)) break;
  return sw.result;
}

SuiteResult suite_free_term(int bound, GlEngine& engine) {
  Sweep sw("free-term", bound);
  for_all_perms(1, bound, [&](const Permutation& a) {
    if (is_positive(a)) return true;
    MPoly free_term = coeff_in_n(engine.chromatic_substitution(a), 0);
    return sw.check(free_term.is_zero(),
                    [&] { return perm_text(a) + ": free term = " + free_term.to_text(); });
  });
  return sw.result;
}

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - i + 1;
    r /= i;
  }
  return r;
}

SuiteResult suite_cyclic_x0(int bound, GlEngine& engine) {
  Sweep sw("cyclic-x0", bound);
  for_all_perms(1, bound, [&](const Permutation& a) {
    if (cycle_count(a) != 1) return true;
    const int m = a.size();
    const int k = m - ascents(a);
    MPoly expected;
    for (int j = 0; j <= k - 1; ++j) {
      Int c = binom(k - 1, j);
      if (j % 2 != 0) c = -c;
      expected += MPoly{c} * MPoly::p(m - j);
    }
    MPoly got = engine.x0(a);
    sw.check(got == expected, [&] { return perm_text(a) + ": " + sides(got, expected); });
    if (m > 1)
      sw.check(got.coefficient(Monomial::of(Var::p(1), 1)) == 0,
               [&] { return perm_text(a) + ": x0 involves p1"; });
    return sw.alive();
  });
  return sw.result;
}

SuiteResult suite_degree_bound(int bound, GlEngine& engine) {
  Sweep sw("degree-bound", bound);
  for_all_perms(1, bound, [&](const Permutation& a) {
    if (cycle_count(a) != 1 || is_positive(a)) return true;
    MPoly cs = engine.chromatic_substitution(a);
    auto deg = degree_in_n(cs);
    sw.check(deg && *deg <= -2, [&] {
      return perm_text(a) + ": degree " + (deg ? std::to_string(*deg) : "-inf") + " of " +
             cs.to_text();
    });
    if (ascents(a) == a.size() - 2) {
      sw.check(deg && *deg == -2, [&] {
        return perm_text(a) + ": degree " + (deg ? std::to_string(*deg) : "-inf") +
               " with m-2 ascents";
      });
      MPoly expected = MPoly::var(Var::x(), 2) * MPoly::n(-2);
      sw.check(cs == expected, [&] { return perm_text(a) + ": " + sides(cs, expected); });
    }
    return sw.alive();
  });
  return sw.result;
}

SuiteResult suite_divisibility(int bound, GlEngine& engine) {
  Sweep sw("divisibility", bound);
  const std::map<Var, MPoly> at0{{Var::x(), MPoly{0}}};
  const std::map<Var, MPoly> at1{{Var::x(), MPoly{1}}};
  for_all_perms(1, bound, [&](const Permutation& a) {
    MPoly cs = engine.chromatic_substitution(a);
    // The distinguished exponent is where x := 1 sends the whole value:
    // X(N; 1, 1, ...) = N^(f-1) * N^(c-m).
    const int jstar = faces(a) + cycle_count(a) - a.size() - 1;
    auto lo = min_degree_in_n(cs), hi = degree_in_n(cs);
    if (!sw.check(lo.has_value(), [&] { return perm_text(a) + ": zero value"; })) return false;
    for (int j = std::min(*lo, jstar); j <= std::max(*hi, jstar); ++j) {
      MPoly q = coeff_in_n(cs, j);
      if (q.is_zero() && j != jstar) continue;
      sw.check(q.substitute(at0).is_zero(),
               [&] { return perm_text(a) + ": N^" + std::to_string(j) + " coefficient at x=0"; });
      MPoly v1 = q.substitute(at1);
      MPoly want = j == jstar ? MPoly{1} : MPoly{0};
      sw.check(v1 == want, [&] {
        return perm_text(a) + ": N^" + std::to_string(j) + " coefficient at x=1; " +
               sides(v1, want);
      });
      if (!sw.alive()) return false;
    }
    return sw.alive();
  });
  return sw.result;
}

SuiteResult suite_successor(int bound, GlEngine& engine) {
  Sweep sw("successor", bound);
  for_all_perms(2, bound, [&](const Permutation& a) {
    Permutation s = a;
    for (int t = 0; t < a.size(); ++t, s = cyclic_shift(s)) {
      if (s(1) != 2) continue;
      std::vector<int> rest;
      for (int v = 2; v <= s.size(); ++v) rest.push_back(v);
      MPoly lhs = engine.chromatic_substitution(s);
      MPoly rhs = engine.chromatic_substitution(restriction(s, rest));
      return sw.check(lhs == rhs, [&] { return perm_text(a) + ": " + sides(lhs, rhs); });
    }
    return true;
  });
  return sw.result;
}

SuiteResult suite_pbw(int bound, unsigned seed, GlEngine& engine) {
  Sweep sw("pbw", bound);
  const int mcap = std::min(bound, 4);
  for (int n : {2, 3}) {
    for_all_perms(0, mcap, [&](const Permutation& a) {
      PBWElement direct = wgl_direct(a, n);
      PBWElement via_poly = eval_casimir_poly(engine.wgl(a), n);
      return sw.check(direct == via_poly, [&] {
        return perm_text(a) + " at n=" + std::to_string(n) + ": defining sum != Casimir value";
      });
    });
    if (!sw.alive()) break;
    // Centrality of the Casimir images.
    for (int k = 1; k <= 3 && sw.alive(); ++k) {
      PBWElement ck = wgl_direct(standard_cycle(k), n);
      for (int i = 1; i <= n && sw.alive(); ++i)
        for (int j = 1; j <= n && sw.alive(); ++j) {
          PBWElement e = PBWElement::of(Word{Gen{i, j}});
          sw.check(pbw_mul(ck, e, n) == pbw_mul(e, ck, n), [&] {
            std::ostringstream os;
            os << "C" << k << " does not commute with E(" << i << "," << j << ") at n=" << n;
            return os.str();
          });
        }
    }
  }
  // Seeded associativity spot-checks at n=2.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(0, 4), idx(1, 2);
  for (int trial = 0; trial < 50 && sw.alive(); ++trial) {
    auto word = [&] {
      Word w(static_cast<size_t>(len(rng)));
      for (auto& g : w) g = Gen{idx(rng), idx(rng)};
      return w;
    };
    Word w1 = word(), w2 = word();
    Word joined = w1;
    joined.insert(joined.end(), w2.begin(), w2.end());
    sw.check(normal_order(joined, 2) == pbw_mul(normal_order(w1, 2), normal_order(w2, 2), 2),
             [&] { return "normal ordering is not multiplicative on a random word pair"; });
  }
  return sw.result;
}

SuiteResult suite_graph_hopf(int bound, GlEngine&) {
  Sweep sw("graph-hopf", bound);
  // The intersection-graph map respects coproducts.
  for_all_perms(0, bound, [&](const Permutation& a) {
    auto cs = cycles(a).cycles;
    const size_t c = cs.size();
    SimpleGraph g = intersection_graph(a);
    std::map<std::pair<std::string, std::string>, long> left, right;
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
      std::vector<int> elems, rest_elems, verts, rest_verts;
      for (size_t v = 0; v < c; ++v) {
        if ((mask >> v) & 1u) {
          verts.push_back(static_cast<int>(v) + 1);
          for (int e : cs[v]) elems.push_back(e);
        } else {
          rest_verts.push_back(static_cast<int>(v) + 1);
          for (int e : cs[v]) rest_elems.push_back(e);
        }
      }
      std::sort(elems.begin(), elems.end());
      std::sort(rest_elems.begin(), rest_elems.end());
      ++left[{graph_canonical_key(intersection_graph(restriction(a, elems))),
              graph_canonical_key(intersection_graph(restriction(a, rest_elems)))}];
      ++right[{graph_canonical_key(induced_subgraph(g, verts)),
               graph_canonical_key(induced_subgraph(g, rest_verts))}];
    }
    return sw.check(left == right,
                    [&] { return perm_text(a) + ": coproduct images differ under gamma"; });
  });
  if (!sw.alive()) return sw.result;
  // The chromatic polynomial is a Hopf morphism on graphs with <= 5 vertices,
  // tested through integer evaluations of x := a + b.
  auto chi_at = [](const SimpleGraph& g, int v) {
    return chromatic_polynomial(g).substitute({{Var::x(), MPoly{v}}});
  };
  for (int n = 0; n <= 5 && sw.alive(); ++n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) all_edges.emplace_back(i, j);
    for (unsigned emask = 0; emask < (1u << all_edges.size()) && sw.alive(); ++emask) {
      std::vector<std::pair<int, int>> edges;
      for (size_t e = 0; e < all_edges.size(); ++e)
        if ((emask >> e) & 1u) edges.push_back(all_edges[e]);
      SimpleGraph g = make_graph(n, std::move(edges));
      auto splits = graph_coproduct(g);
      for (int va = 0; va <= 4 && sw.alive(); ++va)
        for (int vb = 0; vb <= 4 && sw.alive(); ++vb) {
          MPoly lhs = chi_at(g, va + vb);
          MPoly rhs;
          for (const auto& [gi, gj] : splits) rhs += chi_at(gi, va) * chi_at(gj, vb);
          sw.check(lhs == rhs, [&] {
            return "graph " + graph_to_json(g) + " at (" + std::to_string(va) + "," +
                   std::to_string(vb) + "): " + sides(lhs, rhs);
          });
        }
    }
  }
  return sw.result;
}

const std::map<std::string, int>& defaults() {
  static const std::map<std::string, int> d{
      {"gl-type", 6},     {"specializations", 6}, {"hopf-hom", 6},  {"chromatic", 8},
      {"free-term", 7},   {"cyclic-x0", 7},       {"degree-bound", 7},
      {"divisibility", 6}, {"successor", 6},      {"xi-cases", 6},  {"pbw", 4},
      {"graph-hopf", 6}};
  return d;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, bound] : defaults()) v.push_back(name);
    return v;
  }();
  return names;
}

int default_bound(const std::string& name) {
  auto it = defaults().find(name);
  if (it == defaults().end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second;
}

SuiteResult run_suite(const std::string& name, int bound, unsigned seed, GlEngine& engine) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  if (name == "gl-type") return suite_gl_type(bound, engine);
  if (name == "specializations") return suite_specializations(bound, engine);
  if (name == "hopf-hom") return suite_hopf_hom(bound, engine);
  if (name == "chromatic") return suite_chromatic(bound, engine);
  if (name == "free-term") return suite_free_term(bound, engine);
  if (name == "cyclic-x0") return suite_cyclic_x0(bound, engine);
  if (name == "degree-bound") return suite_degree_bound(bound, engine);
  if (name == "divisibility") return suite_divisibility(bound, engine);
  if (name == "successor") return suite_successor(bound, engine);
  if (name == "xi-cases") return suite_xi_cases(bound, engine);
  if (name == "pbw") return suite_pbw(bound, seed, engine);
  if (name == "graph-hopf") return suite_graph_hopf(bound, engine);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace glw
