#include "glw/canonical.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace glw {

namespace {

using Word = std::vector<std::vector<int>>;

Word cycle_word(const Permutation& a) { return cycles(a).cycles; }

// Closure of {a} under the global cyclic shift and, for every two-block
// concatenation split, the cyclic shift of either block. Compositions of
// these generators produce independent shifts inside arbitrary groupings of
// factors, and block swaps come out of global shifts, so the closure is the
// whole equivalence class.
std::vector<Permutation> class_members(const Permutation& a) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier{a};
  seen.insert(a);
  auto push = [&](Permutation p) {
    if (seen.insert(p).second) frontier.push_back(std::move(p));
  };
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.back());
    frontier.pop_back();
    push(cyclic_shift(cur));
    const int m = cur.size();
    int prefix_max = 0;
    for (int j = 1; j < m; ++j) {
      prefix_max = std::max(prefix_max, cur(j));
      if (prefix_max != j) continue;
      std::vector<int> left_img, right_img;
      for (int i = 1; i <= j; ++i) left_img.push_back(cur(i));
      for (int i = j + 1; i <= m; ++i) right_img.push_back(cur(i) - j);
      Permutation left(std::move(left_img)), right(std::move(right_img));
      push(concat(cyclic_shift(left), right));
      push(concat(left, cyclic_shift(right)));
    }
    if (seen.size() > 2'000'000) throw std::logic_error("equivalence class closure blew up");
  }
  return {seen.begin(), seen.end()};
}

struct CanonicalCache {
  std::mutex mu;
  std::unordered_map<Permutation, Permutation, PermutationHash> map;
};

CanonicalCache& cache() {
  static CanonicalCache c;
  return c;
}

}  // namespace

ClassKey canonical_form(const Permutation& a) {
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().map.find(a);
    if (it != cache().map.end()) return ClassKey(it->second);
  }
  auto members = class_members(a);
  const Permutation* best = &members.front();
  Word best_word = cycle_word(*best);
  for (const auto& p : members) {
    if (&p == best) continue;
    Word w = cycle_word(p);
    if (w < best_word) {
      best = &p;
      best_word = std::move(w);
    }
  }
  Permutation canonical = *best;
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    for (auto& p : members) cache().map.emplace(std::move(p), canonical);
  }
  return ClassKey(std::move(canonical));
}

bool class_less(const ClassKey& a, const ClassKey& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return cycle_word(a.perm()) < cycle_word(b.perm());
}

std::vector<Permutation> equivalence_class(const Permutation& a) { return class_members(a); }

}  // namespace glw
