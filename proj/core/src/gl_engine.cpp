#include "glw/gl_engine.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace glw {

namespace {

bool same_cycle(const Permutation& a, int u, int v) {
  for (int w = a(u); w != u; w = a(w))
    if (w == v) return true;
  return false;
}

// Removes element e from a, rerouting its predecessor to its successor, and
// renumbers. e must not be a fixed point.
Permutation contract_moving(const Permutation& a, int e) {
  const int m = a.size();
  std::vector<int> img;
  img.reserve(static_cast<size_t>(m) - 1);
  for (int i = 1; i <= m; ++i) {
    if (i == e) continue;
    int v = a(i) == e ? a(e) : a(i);
    img.push_back(v > e ? v - 1 : v);
  }
  return Permutation(std::move(img));
}

// Removes a fixed point (or any invariant singleton) of a and renumbers.
Permutation drop_element(const Permutation& a, int e) {
  const int m = a.size();
  std::vector<int> img;
  img.reserve(static_cast<size_t>(m) - 1);
  for (int i = 1; i <= m; ++i) {
    if (i == e) continue;
    int v = a(i);
    img.push_back(v > e ? v - 1 : v);
  }
  return Permutation(std::move(img));
}

}  // namespace

PivotOutcome pivot(const Permutation& a, int l) {
  const int m = a.size();
  if (l < 1 || l >= m) throw std::invalid_argument("pivot position out of range");
  if (a(l) == l + 1)
    throw std::invalid_argument("pivot at an ascending adjacent pair is not part of the recurrence");

  PivotOutcome out;
  out.kind = a(l + 1) == l           ? PivotKind::Cut0
             : same_cycle(a, l, l + 1) ? PivotKind::Cut
                                       : PivotKind::Join;

  // alpha' = t a t with t = (l, l+1).
  auto t = [l](int v) { return v == l ? l + 1 : v == l + 1 ? l : v; };
  std::vector<int> conj(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) conj[static_cast<size_t>(i) - 1] = t(a(t(i)));
  out.alpha_prime = Permutation(std::move(conj));

  // at = a o t; in the Cut0 case l is a fixed point of at.
  std::vector<int> atv(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) atv[static_cast<size_t>(i) - 1] = a(t(i));
  Permutation at(std::move(atv));

  if (out.kind == PivotKind::Cut0) {
    Permutation b1 = contract_moving(at, l + 1);
    out.beta1 = {MPoly::c(1), drop_element(b1, l)};  // l survived as a 1-cycle
    out.beta2 = {MPoly::n(), drop_element(at, l)};
  } else {
    out.beta1 = {MPoly{1}, contract_moving(at, l + 1)};
    out.beta2 = {MPoly{1}, contract_moving(at, l)};
  }
  return out;
}

std::optional<int> pivot_position(const Permutation& rep) {
  for (int k = 1; k <= rep.size(); ++k)
    if (rep(k) > k + 1) return rep(k) - 1;
  return std::nullopt;
}

std::optional<MPoly> GlEngine::lookup(const ClassKey& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void GlEngine::store(const ClassKey& key, const MPoly& value) {
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(key, value);
}

MPoly GlEngine::wgl(const Permutation& a) {
  MPoly out{1};
  for (const auto& factor : connected_factors(a)) out *= wgl_connected(factor);
  return out;
}

MPoly GlEngine::wgl_connected(const Permutation& factor) {
  ClassKey key = canonical_form(factor);
  if (auto hit = lookup(key)) return *hit;

  const Permutation& rep = key.perm();
  MPoly value;
  auto l = pivot_position(rep);
  if (!l) {
    // rep(k) <= k+1 everywhere makes rep a concatenation of standard cycles.
    value = MPoly{1};
    for (const auto& f : connected_factors(rep)) {
      if (!is_standard_cycle(f))
        throw InternalError("pivot-free form is not a product of standard cycles: " +
                            format_permutation(rep, PermNotation::Cycles));
      value *= MPoly::c(f.size());
    }
  } else {
    PivotOutcome step = pivot(rep, *l);
    // The same-size branch must strictly descend in the class order.
    ClassKey next = canonical_form(step.alpha_prime);
    if (!class_less(next, key))
      throw InternalError("pivot did not descend: " +
                          format_permutation(rep, PermNotation::Cycles));
    value = wgl(step.alpha_prime) + step.beta1.scalar * wgl(step.beta1.perm) -
            step.beta2.scalar * wgl(step.beta2.perm);
  }
  if (auto low = min_degree_in_n(value); low && *low < 0)
    throw InternalError("weight value left the polynomial ring");
  store(key, value);
  return value;
}

MPoly GlEngine::prechromatic(const Permutation& a) {
  MPoly w = wgl(a);
  std::map<Var, MPoly> rule;
  for (Var v : w.variables())
    if (v.kind == Var::Kind::C)
      rule.emplace(v, MPoly::p(v.index) * MPoly::n(v.index - 1));
  MPoly x = MPoly::n(cycle_count(a) - a.size()) * w.substitute(rule);
  for (const auto& [mono, c] : x.terms()) {
    int e = mono.exponent(Var::n());
    if (e > 0 || e % 2 != 0)
      throw InternalError("prechromatic value outside C[N^-2, p]");
  }
  return x;
}

MPoly GlEngine::x_coeff(const Permutation& a, int k) {
  if (k < 0) throw std::invalid_argument("coefficient index must be >= 0");
  return coeff_in_n(prechromatic(a), -2 * k);
}

MPoly GlEngine::chromatic_substitution(const Permutation& a) {
  MPoly x = prechromatic(a);
  std::map<Var, MPoly> rule;
  for (Var v : x.variables())
    if (v.kind == Var::Kind::P) rule.emplace(v, MPoly::x());
  return x.substitute(rule);
}

MPoly GlEngine::specialize(const Permutation& a, SpecialRule rule) {
  MPoly w = wgl(a);
  std::map<Var, MPoly> sub;
  for (Var v : w.variables()) {
    switch (rule) {
      case SpecialRule::Faces:
        if (v.kind == Var::Kind::C) sub.emplace(v, MPoly::n(v.index - 1));
        break;
      case SpecialRule::Shifted:
        if (v.kind == Var::Kind::C) sub.emplace(v, MPoly::n(v.index + 1));
        break;
      case SpecialRule::CycleCount:
        if (v.kind == Var::Kind::C || v.kind == Var::Kind::N) sub.emplace(v, MPoly::x());
        break;
    }
  }
  return w.substitute(sub);
}

size_t GlEngine::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

void GlEngine::save_cache(std::ostream& out) const {
  nlohmann::json entries = nlohmann::json::array();
  {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<const std::pair<const ClassKey, MPoly>*> order;
    order.reserve(memo_.size());
    for (const auto& kv : memo_) order.push_back(&kv);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
      return class_less(x->first, y->first);
    });
    for (auto* kv : order)
      entries.push_back({format_permutation(kv->first.perm(), PermNotation::Cycles),
                         nlohmann::json::parse(kv->second.to_json())});
  }
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["entries"] = entries;
  out << doc.dump() << '\n';
}

void GlEngine::load_cache(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cache file: ") + e.what());
  }
  if (!j.is_object() || j.value("version", 0) != 1)
    throw std::invalid_argument("cache file: unsupported version");
  for (const auto& entry : j["entries"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("cache file: malformed entry");
    Permutation p = parse_permutation(entry[0].get<std::string>(), PermNotation::Cycles);
    MPoly value = MPoly::from_json(entry[1].dump());
    store(canonical_form(p), value);
  }
}

}  // namespace glw
