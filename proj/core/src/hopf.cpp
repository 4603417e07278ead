#include "glw/hopf.hpp"

namespace glw {

HopfElement HopfElement::of(const ClassKey& k, Int coeff) {
  HopfElement e;
  e.add(k, coeff);
  return e;
}

void HopfElement::add(const ClassKey& k, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = t_.emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) t_.erase(it);
  }
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  for (const auto& [k, c] : o.t_) add(k, c);
  return *this;
}

void TensorElement::add(const ClassKey& left, const ClassKey& right, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = t_.emplace(Key{left, right}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) t_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}

HopfElement product(const HopfElement& a, const HopfElement& b) {
  HopfElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add(canonical_form(concat(ka.perm(), kb.perm())), ca * cb);
  return out;
}

namespace {

// Ordered splits of the cycle set, visiting (U, complement) element sets.
template <typename F>
void for_each_cycle_split(const Permutation& a, F&& visit) {
  auto cs = cycles(a).cycles;
  const size_t c = cs.size();
  if (c > 20) throw std::invalid_argument("coproduct restricted to <= 20 cycles");
  for (unsigned mask = 0; mask < (1u << c); ++mask) {
    std::vector<int> in, rest;
    for (size_t v = 0; v < c; ++v)
      for (int e : cs[v]) ((mask >> v) & 1u ? in : rest).push_back(e);
    std::sort(in.begin(), in.end());
    std::sort(rest.begin(), rest.end());
    visit(in, rest);
  }
}

}  // namespace

TensorElement coproduct(const ClassKey& k) {
  TensorElement out;
  const Permutation& rep = k.perm();
  for_each_cycle_split(rep, [&](const std::vector<int>& in, const std::vector<int>& rest) {
    out.add(canonical_form(restriction(rep, in)), canonical_form(restriction(rep, rest)), 1);
  });
  return out;
}

namespace {

MPoly rename_p(const MPoly& poly, Var::Kind side) {
  std::map<Var, MPoly> rule;
  for (Var v : poly.variables())
    if (v.kind == Var::Kind::P)
      rule.emplace(v, MPoly::var({side, v.index}));
  return poly.substitute(rule);
}

}  // namespace

MPoly xi(GlEngine& engine, const Permutation& a) {
  MPoly out;
  for_each_cycle_split(a, [&](const std::vector<int>& in, const std::vector<int>& rest) {
    out += rename_p(engine.x0(restriction(a, in)), Var::Kind::PL) *
           rename_p(engine.x0(restriction(a, rest)), Var::Kind::PR);
  });
  return out;
}

bool check_hopf_hom(GlEngine& engine, const Permutation& a) {
  MPoly x0 = engine.x0(a);
  std::map<Var, MPoly> rule;
  for (Var v : x0.variables())
    if (v.kind == Var::Kind::P)
      rule.emplace(v, MPoly::pl(v.index) + MPoly::pr(v.index));
  return xi(engine, a) == x0.substitute(rule);
}

bool lemma_xi_cases(GlEngine& engine, const Permutation& a, int l) {
  PivotOutcome step = pivot(a, l);
  MPoly lhs = xi(engine, a);
  switch (step.kind) {
    case PivotKind::Join:
      return lhs == xi(engine, step.alpha_prime) + xi(engine, step.beta1.perm) -
                        xi(engine, step.beta2.perm);
    case PivotKind::Cut:
      return lhs == xi(engine, step.alpha_prime);
    case PivotKind::Cut0:
      return lhs == xi(engine, step.alpha_prime) - xi(engine, step.beta2.perm);
  }
  return false;
}

}  // namespace glw
