#pragma once

#include <iosfwd>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "glw/canonical.hpp"
#include "glw/mpoly.hpp"
#include "glw/permutation.hpp"

namespace glw {

// A reduction step has reached a state the termination argument rules out;
// indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class PivotKind { Join, Cut, Cut0 };

struct PivotTerm {
  MPoly scalar;
  Permutation perm;
};

// The four terms of the recurrence at a neighboring pair (l, l+1):
//   value(alpha) = value(alpha') + scalar1 * value(beta1) - scalar2 * value(beta2)
// alpha' is the conjugate by the transposition t = (l, l+1); beta1 and beta2
// contract alpha*t at l+1 and l. Contracting a fixed point of alpha*t puts N
// on that term; in the Cut0 case the other element survives as a 1-cycle and
// is split off as a C1 factor, leaving beta1 with m-2 elements.
struct PivotOutcome {
  PivotKind kind;
  Permutation alpha_prime;
  PivotTerm beta1;
  PivotTerm beta2;
};

// Requires 1 <= l < m and a(l) != l+1.
PivotOutcome pivot(const Permutation& a, int l);

// The reduction position for a canonical representative: the minimal k with
// rep(k) > k+1 gives l = rep(k) - 1. nullopt iff rep is a concatenation of
// standard cycles.
std::optional<int> pivot_position(const Permutation& rep);

enum class SpecialRule { Faces, Shifted, CycleCount };

// Evaluator for the universal weight system and everything derived from it
// by substitution. The memo table keyed by connected-factor classes is the
// only mutable state; all evaluations are safe to run concurrently.
class GlEngine {
public:
  // Value in C[N; C1, C2, ...]; multiplicative over connected factors,
  // standard k-cycles map to C_k, everything else reduces via `pivot`.
  MPoly wgl(const Permutation& a);

  // N^(c-m) * wgl |_{C_k := p_k N^(k-1)}; only even nonpositive powers of N.
  MPoly prechromatic(const Permutation& a);
  // Coefficient of N^(-2k) in the prechromatic value.
  MPoly x_coeff(const Permutation& a, int k);
  MPoly x0(const Permutation& a) { return x_coeff(a, 0); }
  // Prechromatic value with every p_k replaced by x.
  MPoly chromatic_substitution(const Permutation& a);
  // Faces: C_k := N^(k-1);  Shifted: C_k := N^(k+1);
  // CycleCount: C_k := x together with N := x.
  MPoly specialize(const Permutation& a, SpecialRule rule);

  size_t cache_size() const;
  // Versioned JSON list of (canonical permutation, polynomial) pairs.
  void save_cache(std::ostream& out) const;
  void load_cache(std::istream& in);  // merges; rejects other versions

private:
  MPoly wgl_connected(const Permutation& factor);
  std::optional<MPoly> lookup(const ClassKey& key) const;
  void store(const ClassKey& key, const MPoly& value);

  mutable std::mutex mu_;
  std::unordered_map<ClassKey, MPoly, ClassKeyHash> memo_;
};

}  // namespace glw
