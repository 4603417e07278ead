#include "glw/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

namespace glw {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int m = size();
  std::vector<char> seen(static_cast<size_t>(m), 0);
  for (int v : img_) {
    if (v < 1 || v > m) throw std::invalid_argument("image out of range in permutation");
    if (seen[static_cast<size_t>(v) - 1]) throw std::invalid_argument("repeated image in permutation");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(static_cast<size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

size_t PermutationHash::operator()(const Permutation& p) const {
  size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Permutation standard_cycle(int m) {
  if (m < 0) throw std::invalid_argument("negative size");
  std::vector<int> img(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) img[static_cast<size_t>(i) - 1] = i % m + 1;
  return Permutation(std::move(img));
}

bool is_standard_cycle(const Permutation& a) {
  const int m = a.size();
  if (m == 0) return false;
  for (int i = 1; i <= m; ++i)
    if (a(i) != i % m + 1) return false;
  return true;
}

Permutation inverse(const Permutation& a) {
  std::vector<int> img(static_cast<size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) img[static_cast<size_t>(a(i)) - 1] = i;
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("size mismatch in composition");
  std::vector<int> img(static_cast<size_t>(f.size()));
  for (int i = 1; i <= f.size(); ++i) img[static_cast<size_t>(i) - 1] = f(g(i));
  return Permutation(std::move(img));
}

CycleSet cycles(const Permutation& a) {
  CycleSet out;
  const int m = a.size();
  std::vector<char> seen(static_cast<size_t>(m), 0);
  for (int start = 1; start <= m; ++start) {
    if (seen[static_cast<size_t>(start) - 1]) continue;
    std::vector<int> cyc;
    for (int v = start; !seen[static_cast<size_t>(v) - 1]; v = a(v)) {
      seen[static_cast<size_t>(v) - 1] = 1;
      cyc.push_back(v);
    }
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

int cycle_count(const Permutation& a) {
  const int m = a.size();
  std::vector<char> seen(static_cast<size_t>(m), 0);
  int c = 0;
  for (int start = 1; start <= m; ++start) {
    if (seen[static_cast<size_t>(start) - 1]) continue;
    ++c;
    for (int v = start; !seen[static_cast<size_t>(v) - 1]; v = a(v))
      seen[static_cast<size_t>(v) - 1] = 1;
  }
  return c;
}

int ascents(const Permutation& a) {
  int n = 0;
  for (int i = 1; i < a.size(); ++i)
    if (a(i) > i) ++n;
  return n;
}

bool is_positive(const Permutation& a) {
  return ascents(a) == a.size() - cycle_count(a);
}

int faces(const Permutation& a) {
  const int m = a.size();
  if (m == 0) return 1;
  std::vector<int> phi(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) phi[static_cast<size_t>(i) - 1] = a(i == 1 ? m : i - 1);
  return cycle_count(Permutation(std::move(phi)));
}

Permutation cyclic_shift(const Permutation& a) {
  const int m = a.size();
  if (m == 0) return a;
  std::vector<int> img(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    int v = a(i % m + 1);
    img[static_cast<size_t>(i) - 1] = v == 1 ? m : v - 1;
  }
  return Permutation(std::move(img));
}

Permutation restriction(const Permutation& a, const std::vector<int>& u) {
  const int m = a.size();
  std::vector<int> rank(static_cast<size_t>(m) + 1, 0);
  int n = 0;
  int prev = 0;
  for (int v : u) {
    if (v <= prev || v > m) throw std::invalid_argument("restriction subset must be sorted within 1..m");
    prev = v;
    rank[static_cast<size_t>(v)] = ++n;
  }
  std::vector<int> img(static_cast<size_t>(n));
  for (int v : u) {
    int w = a(v);
    while (rank[static_cast<size_t>(w)] == 0) w = a(w);
    img[static_cast<size_t>(rank[static_cast<size_t>(v)]) - 1] = rank[static_cast<size_t>(w)];
  }
  return Permutation(std::move(img));
}

Permutation concat(const Permutation& a, const Permutation& b) {
  std::vector<int> img = a.images();
  img.reserve(img.size() + b.images().size());
  for (int v : b.images()) img.push_back(v + a.size());
  return Permutation(std::move(img));
}

std::vector<Permutation> connected_factors(const Permutation& a) {
  std::vector<Permutation> out;
  const int m = a.size();
  int lo = 1, hi = 0;
  for (int i = 1; i <= m; ++i) {
    hi = std::max(hi, a(i));
    if (hi == i) {
      std::vector<int> img;
      img.reserve(static_cast<size_t>(i - lo + 1));
      for (int j = lo; j <= i; ++j) img.push_back(a(j) - lo + 1);
      out.emplace_back(std::move(img));
      lo = i + 1;
    }
  }
  return out;
}

namespace {

struct PermScanner {
  const std::string& s;
  size_t pos = 0;

  explicit PermScanner(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    long v = 0;
    for (size_t i = start; i < pos; ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000) fail("element too large");
    }
    return static_cast<int>(v);
  }
};

Permutation parse_cycles(const std::string& text) {
  PermScanner sc(text);
  int declared_m = -1;
  sc.skip_ws();
  if (sc.s.compare(sc.pos, 2, "m=") == 0) {
    sc.pos += 2;
    declared_m = sc.integer();
  }
  std::vector<std::vector<int>> cycles;
  int max_elem = 0;
  while (!sc.eof()) {
    sc.skip_ws();
    if (sc.s[sc.pos] != '(') sc.fail("expected '('");
    ++sc.pos;
    std::vector<int> cyc;
    for (;;) {
      cyc.push_back(sc.integer());
      max_elem = std::max(max_elem, cyc.back());
      sc.skip_ws();
      if (sc.pos < sc.s.size() && sc.s[sc.pos] == ',') {
        ++sc.pos;
        continue;
      }
      if (sc.pos < sc.s.size() && sc.s[sc.pos] == ')') {
        ++sc.pos;
        break;
      }
      if (sc.pos < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.pos]))) continue;
      sc.fail("expected element, ',' or ')'");
    }
    cycles.push_back(std::move(cyc));
  }
  int m = declared_m >= 0 ? declared_m : max_elem;
  if (max_elem > m) throw ParseError("element exceeds declared size", 0);
  std::vector<int> img(static_cast<size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  std::vector<char> used(static_cast<size_t>(m), 0);
  for (const auto& cyc : cycles) {
    for (int v : cyc) {
      if (v < 1) throw ParseError("elements are 1-based", 0);
      if (used[static_cast<size_t>(v) - 1]) throw ParseError("duplicate element " + std::to_string(v), 0);
      used[static_cast<size_t>(v) - 1] = 1;
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      img[static_cast<size_t>(cyc[i]) - 1] = cyc[(i + 1) % cyc.size()];
  }
  if (declared_m < 0) {
    for (int v = 1; v <= m; ++v)
      if (!used[static_cast<size_t>(v) - 1])
        throw ParseError("element " + std::to_string(v) +
                             " missing; declare trailing fixed points with m=",
                         0);
  }
  return Permutation(std::move(img));
}

Permutation parse_one_line(const std::string& text) {
  PermScanner sc(text);
  std::vector<int> img;
  if (sc.eof()) return Permutation{};
  for (;;) {
    img.push_back(sc.integer());
    if (sc.eof()) break;
    sc.skip_ws();
    if (sc.s[sc.pos] != ',') sc.fail("expected ','");
    ++sc.pos;
  }
  try {
    return Permutation(std::move(img));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

Permutation parse_permutation(const std::string& text, PermNotation notation) {
  if (notation == PermNotation::Cycles) return parse_cycles(text);
  return parse_one_line(text);
}

std::string format_permutation(const Permutation& a, PermNotation notation) {
  std::ostringstream out;
  if (notation == PermNotation::Cycles) {
    for (const auto& cyc : cycles(a).cycles) {
      out << '(';
      for (size_t i = 0; i < cyc.size(); ++i) {
        if (i) out << ' ';
        out << cyc[i];
      }
      out << ')';
    }
  } else {
    const auto& img = a.images();
    for (size_t i = 0; i < img.size(); ++i) {
      if (i) out << ',';
      out << img[i];
    }
  }
  return out.str();
}

namespace {

void partitions_rec(int next, int m, std::vector<std::vector<int>>& blocks,
                    std::vector<Permutation>& out) {
  if (next > m) {
    std::vector<int> img(static_cast<size_t>(m));
    for (const auto& b : blocks)
      for (size_t i = 0; i < b.size(); ++i)
        img[static_cast<size_t>(b[i]) - 1] = b[(i + 1) % b.size()];
    out.emplace_back(std::move(img));
    return;
  }
  for (size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(next);
    partitions_rec(next + 1, m, blocks, out);
    blocks[i].pop_back();
  }
  blocks.push_back({next});
  partitions_rec(next + 1, m, blocks, out);
  blocks.pop_back();
}

void matchings_rec(std::vector<int>& pool, std::vector<int>& img, int m,
                   std::vector<Permutation>& out) {
  if (pool.empty()) {
    out.emplace_back(img);
    return;
  }
  int first = pool.front();
  for (size_t k = 1; k < pool.size(); ++k) {
    int partner = pool[static_cast<size_t>(k)];
    img[static_cast<size_t>(first) - 1] = partner;
    img[static_cast<size_t>(partner) - 1] = first;
    std::vector<int> rest;
    rest.reserve(pool.size() - 2);
    for (size_t i = 1; i < pool.size(); ++i)
      if (i != k) rest.push_back(pool[i]);
    matchings_rec(rest, img, m, out);
  }
}

}  // namespace

std::vector<Permutation> enumerate_permutations(EnumKind kind, int m) {
  if (m < 0) throw std::invalid_argument("negative size");
  std::vector<Permutation> out;
  switch (kind) {
    case EnumKind::All: {
      std::vector<int> img(static_cast<size_t>(m));
      std::iota(img.begin(), img.end(), 1);
      do {
        out.emplace_back(img);
      } while (std::next_permutation(img.begin(), img.end()));
      break;
    }
    case EnumKind::Positive: {
      std::vector<std::vector<int>> blocks;
      partitions_rec(1, m, blocks, out);
      break;
    }
    case EnumKind::Chord: {
      if (m % 2 != 0) throw std::invalid_argument("chord diagrams need an even element count");
      std::vector<int> pool(static_cast<size_t>(m));
      std::iota(pool.begin(), pool.end(), 1);
      std::vector<int> img(static_cast<size_t>(m), 0);
      matchings_rec(pool, img, m, out);
      break;
    }
  }
  return out;
}

}  // namespace glw
