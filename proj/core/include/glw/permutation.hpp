#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace glw {

struct ParseError : std::runtime_error {
  ParseError(std::string what, size_t position)
      : std::runtime_error(std::move(what)), position(position) {}
  size_t position;
};

// A bijection of {1..m} in one-line notation; m == 0 is the empty
// permutation. Values are immutable after construction.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // throws std::invalid_argument

  static Permutation identity(int m);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> img_;
};

struct PermutationHash {
  size_t operator()(const Permutation& p) const;
};

// Disjoint-cycle decomposition; each cycle starts at its minimal element and
// cycles are listed by increasing minimum.
struct CycleSet {
  std::vector<std::vector<int>> cycles;
};

Permutation standard_cycle(int m);
bool is_standard_cycle(const Permutation& a);
Permutation inverse(const Permutation& a);
// compose(f, g)(i) = f(g(i))
Permutation compose(const Permutation& f, const Permutation& g);

CycleSet cycles(const Permutation& a);
int cycle_count(const Permutation& a);
// |{i : 0 < i < m, a(i) > i}|
int ascents(const Permutation& a);
bool is_positive(const Permutation& a);
// Hyperface count: the number of cycles of i -> a(i-1) (indices cyclic).
// faces(empty) == 1.
int faces(const Permutation& a);
Permutation cyclic_shift(const Permutation& a);  // sigma^-1 a sigma
// u must be a sorted duplicate-free subset of {1..m}; surviving elements keep
// their relative cyclic order within each cycle and are renumbered to
// {1..|u|}.
Permutation restriction(const Permutation& a, const std::vector<int>& u);
Permutation concat(const Permutation& a, const Permutation& b);
// Finest splitting into invariant consecutive intervals, factors renumbered.
std::vector<Permutation> connected_factors(const Permutation& a);

enum class PermNotation { Cycles, OneLine };

// Cycle grammar: optional "m=<int>" prefix, then cycles "(a b c)(d e)";
// elements may be separated by spaces or commas. Fixed points may be omitted
// only when m is declared. One-line notation: comma-separated images.
Permutation parse_permutation(const std::string& text, PermNotation notation);
std::string format_permutation(const Permutation& a, PermNotation notation);

enum class EnumKind { All, Positive, Chord };

// All bijections / all positive permutations (one per set partition) /
// all fixed-point-free involutions. Chord requires even m.
std::vector<Permutation> enumerate_permutations(EnumKind kind, int m);

}  // namespace glw
