#pragma once

#include <vector>

#include "glw/permutation.hpp"

namespace glw {

// Canonical representative of the equivalence class of a permutation under
// cyclic shifts, independent cyclic shifts of connected concatenation
// factors, and reordering of those factors. Two equivalent permutations
// produce equal keys.
class ClassKey {
public:
  ClassKey() = default;

  const Permutation& perm() const { return canonical_; }
  int size() const { return canonical_.size(); }

  friend bool operator==(const ClassKey&, const ClassKey&) = default;

private:
  friend ClassKey canonical_form(const Permutation& a);
  explicit ClassKey(Permutation canonical) : canonical_(std::move(canonical)) {}
  Permutation canonical_;
};

struct ClassKeyHash {
  size_t operator()(const ClassKey& k) const { return PermutationHash{}(k.perm()); }
};

ClassKey canonical_form(const Permutation& a);

// Strict total order on classes: element count first, then the cycle normal
// form words of the canonical representatives lexicographically.
bool class_less(const ClassKey& a, const ClassKey& b);

struct ClassLess {
  bool operator()(const ClassKey& a, const ClassKey& b) const { return class_less(a, b); }
};

// Every member of the equivalence class of `a` (closure under the relations
// above), in no particular order.
std::vector<Permutation> equivalence_class(const Permutation& a);

}  // namespace glw
