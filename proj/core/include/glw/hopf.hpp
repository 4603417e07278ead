#pragma once

#include <map>

#include "glw/canonical.hpp"
#include "glw/gl_engine.hpp"
#include "glw/mpoly.hpp"

namespace glw {

// Integer linear combination of permutation classes.
class HopfElement {
public:
  HopfElement() = default;
  static HopfElement unit() { return of(ClassKey{}); }  // the empty class
  static HopfElement of(const ClassKey& k, Int coeff = 1);

  const std::map<ClassKey, Int, ClassLess>& terms() const { return t_; }
  void add(const ClassKey& k, const Int& coeff);
  HopfElement& operator+=(const HopfElement& o);
  friend bool operator==(const HopfElement&, const HopfElement&) = default;

private:
  std::map<ClassKey, Int, ClassLess> t_;
};

// Integer linear combination of ordered class pairs.
class TensorElement {
public:
  using Key = std::pair<ClassKey, ClassKey>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (class_less(a.first, b.first)) return true;
      if (class_less(b.first, a.first)) return false;
      return class_less(a.second, b.second);
    }
  };

  const std::map<Key, Int, KeyLess>& terms() const { return t_; }
  void add(const ClassKey& left, const ClassKey& right, const Int& coeff);
  TensorElement& operator+=(const TensorElement& o);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
  std::map<Key, Int, KeyLess> t_;
};

// Bilinear extension of [a] * [b] = [concat(a, b)].
HopfElement product(const HopfElement& a, const HopfElement& b);

// Sum of [a|_I] (x) [a|_J] over ordered two-part splits of the cycle set.
TensorElement coproduct(const ClassKey& k);

// Xi(a) = sum over splits of x0(a|_I) (x) x0(a|_J), the two legs written in
// the pL / pR variable copies.
MPoly xi(GlEngine& engine, const Permutation& a);

// Xi(a) == x0(a) |_{p_k := pL_k + pR_k}; this is the homomorphism property
// of x0 at a single permutation.
bool check_hopf_hom(GlEngine& engine, const Permutation& a);

// The per-case identity for Xi at a legal pivot position:
//   Join: Xi(a) == Xi(a') + Xi(b1) - Xi(b2)
//   Cut:  Xi(a) == Xi(a')
//   Cut0: Xi(a) == Xi(a') - Xi(b2)
bool lemma_xi_cases(GlEngine& engine, const Permutation& a, int l);

}  // namespace glw
