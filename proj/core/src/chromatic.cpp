#include "glw/chromatic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace glw {

namespace {

struct ChromaticCache {
  std::mutex mu;
  std::map<std::string, MPoly> map;
};

ChromaticCache& cache() {
  static ChromaticCache c;
  return c;
}

SimpleGraph delete_edge(const SimpleGraph& g, size_t e) {
  auto edges = g.edges;
  edges.erase(edges.begin() + static_cast<long>(e));
  return make_graph(g.n, std::move(edges));
}

SimpleGraph contract_edge(const SimpleGraph& g, size_t e) {
  auto [keep, gone] = g.edges[e];
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (i == e) continue;
    auto [a, b] = g.edges[i];
    if (a == gone) a = keep;
    if (b == gone) b = keep;
    if (a > gone) --a;
    if (b > gone) --b;
    if (a == b) continue;  // the contracted edge's twin, if any
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return make_graph(g.n - 1, std::move(edges));
}

MPoly chi(const SimpleGraph& g) {
  if (g.edges.empty()) return MPoly::var(Var::x(), g.n);
  SimpleGraph bare = make_graph(g.n, g.edges);  // weights play no role here
  std::string key = graph_canonical_key(bare);
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().map.find(key);
    if (it != cache().map.end()) return it->second;
  }
  MPoly value = chi(delete_edge(bare, 0)) - chi(contract_edge(bare, 0));
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    cache().map.emplace(std::move(key), value);
  }
  return value;
}

}  // namespace

MPoly chromatic_polynomial(const SimpleGraph& g) { return chi(g); }

}  // namespace glw
