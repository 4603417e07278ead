#include "glw/pbw.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace glw {

namespace {

constexpr int kMaxRank = 3;
constexpr int kMaxElements = 5;

void check_bounds(int m, int n) {
  if (n < 1 || n > kMaxRank) throw std::domain_error("pbw oracle supports 1 <= n <= 3");
  if (m > kMaxElements) throw std::domain_error("pbw oracle supports m <= 5");
}

void check_word(const Word& w, int n) {
  for (const Gen& g : w)
    if (g.i < 1 || g.i > n || g.j < 1 || g.j > n)
      throw std::invalid_argument("generator index out of range");
}

}  // namespace

PBWElement PBWElement::of(Word w, Int coeff) {
  PBWElement e;
  e.add(w, coeff);
  return e;
}

void PBWElement::add(const Word& w, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = t_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) t_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [w, c] : o.t_) add(w, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [w, c] : o.t_) add(w, -c);
  return *this;
}

PBWElement normal_order(const Word& w, int n) {
  check_word(w, n);
  PBWElement out;
  std::vector<std::pair<Word, Int>> work{{w, Int(1)}};
  while (!work.empty()) {
    auto [word, coeff] = std::move(work.back());
    work.pop_back();
    size_t t = 0;
    while (t + 1 < word.size() && !(word[t + 1] < word[t])) ++t;
    if (t + 1 >= word.size()) {
      out.add(word, coeff);
      continue;
    }
    // E_ab E_cd = E_cd E_ab + d_bc E_ad - d_da E_cb
    Gen ab = word[t], cd = word[t + 1];
    Word swapped = word;
    std::swap(swapped[t], swapped[t + 1]);
    work.emplace_back(std::move(swapped), coeff);
    if (ab.j == cd.i) {
      Word merged = word;
      merged.erase(merged.begin() + static_cast<long>(t + 1));
      merged[t] = Gen{ab.i, cd.j};
      work.emplace_back(std::move(merged), coeff);
    }
    if (cd.j == ab.i) {
      Word merged = word;
      merged.erase(merged.begin() + static_cast<long>(t + 1));
      merged[t] = Gen{cd.i, ab.j};
      work.emplace_back(std::move(merged), -coeff);
    }
  }
  return out;
}

PBWElement pbw_mul(const PBWElement& a, const PBWElement& b, int n) {
  PBWElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      PBWElement part = normal_order(w, n);
      for (const auto& [word, c] : part.terms()) out.add(word, c * ca * cb);
    }
  return out;
}

PBWElement wgl_direct(const Permutation& a, int n) {
  const int m = a.size();
  check_bounds(m, n);
  PBWElement out;
  std::vector<int> idx(static_cast<size_t>(m), 1);
  for (;;) {
    Word w(static_cast<size_t>(m));
    for (int t = 1; t <= m; ++t)
      w[static_cast<size_t>(t) - 1] =
          Gen{idx[static_cast<size_t>(t) - 1], idx[static_cast<size_t>(a(t)) - 1]};
    out += normal_order(w, n);
    int d = m - 1;
    while (d >= 0 && idx[static_cast<size_t>(d)] == n) idx[static_cast<size_t>(d--)] = 1;
    if (d < 0) break;
    ++idx[static_cast<size_t>(d)];
  }
  return out;
}

namespace {

struct CasimirCache {
  std::mutex mu;
  std::map<std::pair<int, int>, PBWElement> map;  // (k, n) -> value
};

CasimirCache& casimir_cache() {
  static CasimirCache c;
  return c;
}

PBWElement casimir_value(int k, int n) {
  std::lock_guard<std::mutex> lock(casimir_cache().mu);
  auto key = std::make_pair(k, n);
  auto it = casimir_cache().map.find(key);
  if (it != casimir_cache().map.end()) return it->second;
  PBWElement v = wgl_direct(standard_cycle(k), n);
  casimir_cache().map.emplace(key, v);
  return v;
}

Int int_pow(Int base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

PBWElement eval_casimir_poly(const MPoly& p, int n) {
  check_bounds(0, n);
  PBWElement out;
  for (const auto& [mono, coeff] : p.terms()) {
    Int scalar = coeff;
    PBWElement factor = PBWElement::one();
    for (const auto& [v, e] : mono.factors()) {
      if (v == Var::n()) {
        if (e < 0) throw std::domain_error("cannot evaluate a negative power of N");
        scalar *= int_pow(Int(n), e);
      } else if (v.kind == Var::Kind::C) {
        check_bounds(v.index, n);
        for (int rep = 0; rep < e; ++rep) factor = pbw_mul(factor, casimir_value(v.index, n), n);
      } else {
        throw std::domain_error("eval_casimir_poly expects a polynomial in N and C_k");
      }
    }
    for (const auto& [w, c] : factor.terms()) out.add(w, c * scalar);
  }
  return out;
}

}  // namespace glw
