#pragma once

#include <compare>
#include <map>
#include <vector>

#include "glw/mpoly.hpp"
#include "glw/permutation.hpp"

namespace glw {

// Matrix unit E_{i,j} of gl(n). The PBW basis sorts words by the
// lexicographic generator order on (i, j).
struct Gen {
  int i = 1;
  int j = 1;
  friend constexpr bool operator==(const Gen&, const Gen&) = default;
  friend constexpr auto operator<=>(const Gen&, const Gen&) = default;
};

using Word = std::vector<Gen>;

// Element of U(gl(n)) written in the PBW basis: every stored word is sorted.
class PBWElement {
public:
  PBWElement() = default;
  static PBWElement one() { return of(Word{}); }
  static PBWElement of(Word w, Int coeff = 1);

  const std::map<Word, Int>& terms() const { return t_; }
  void add(const Word& w, const Int& coeff);
  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  friend bool operator==(const PBWElement&, const PBWElement&) = default;

private:
  std::map<Word, Int> t_;
};

// Rewrites an arbitrary word into the PBW basis using
// [E_ij, E_kl] = d_jk E_il - d_li E_kj.
PBWElement normal_order(const Word& w, int n);

// Product in U(gl(n)) of two normal-ordered elements.
PBWElement pbw_mul(const PBWElement& a, const PBWElement& b, int n);

// The defining sum over index tuples for the weight of a permutation in
// U(gl(n)). Desk-scale bounds: m <= 5, n <= 3.
PBWElement wgl_direct(const Permutation& a, int n);

// Substitutes the integer n for N and the weight of the standard k-cycle for
// C_k, multiplying in U(gl(n)). Same bounds as wgl_direct.
PBWElement eval_casimir_poly(const MPoly& p, int n);

}  // namespace glw
