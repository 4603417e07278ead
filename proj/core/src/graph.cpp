#include "glw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace glw {

SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges,
                       std::vector<int> weights) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("repeated edge");
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != n)
      throw std::invalid_argument("weight count must match vertex count");
    for (int w : weights)
      if (w < 1) throw std::invalid_argument("weights must be >= 1");
  }
  return SimpleGraph{n, std::move(edges), std::move(weights)};
}

namespace {

bool interlace(const std::vector<int>& x, const std::vector<int>& y) {
  // Elements of both cycles in base-line order, run-length encoded by owner;
  // the cycles interlace iff at least four runs alternate.
  std::vector<std::pair<int, int>> merged;  // (element, owner)
  merged.reserve(x.size() + y.size());
  for (int v : x) merged.emplace_back(v, 0);
  for (int v : y) merged.emplace_back(v, 1);
  std::sort(merged.begin(), merged.end());
  int runs = 0, prev = -1;
  for (const auto& [v, owner] : merged) {
    if (owner != prev) {
      ++runs;
      prev = owner;
    }
  }
  return runs >= 4;
}

}  // namespace

SimpleGraph intersection_graph(const Permutation& a) {
  auto cs = cycles(a).cycles;
  for (auto& c : cs) std::sort(c.begin(), c.end());
  const int n = static_cast<int>(cs.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (interlace(cs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]))
        edges.emplace_back(i + 1, j + 1);
  return make_graph(n, std::move(edges));
}

SimpleGraph weighted_intersection_graph(const Permutation& a) {
  SimpleGraph g = intersection_graph(a);
  for (const auto& c : cycles(a).cycles) g.weights.push_back(static_cast<int>(c.size()));
  return g;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& u) {
  std::vector<int> rank(static_cast<size_t>(g.n) + 1, 0);
  int n = 0, prev = 0;
  for (int v : u) {
    if (v <= prev || v > g.n) throw std::invalid_argument("vertex subset must be sorted within 1..n");
    prev = v;
    rank[static_cast<size_t>(v)] = ++n;
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges)
    if (rank[static_cast<size_t>(a)] && rank[static_cast<size_t>(b)])
      edges.emplace_back(rank[static_cast<size_t>(a)], rank[static_cast<size_t>(b)]);
  std::vector<int> weights;
  if (g.weighted())
    for (int v : u) weights.push_back(g.weights[static_cast<size_t>(v) - 1]);
  return make_graph(n, std::move(edges), std::move(weights));
}

std::vector<std::pair<SimpleGraph, SimpleGraph>> graph_coproduct(const SimpleGraph& g) {
  if (g.n > 20) throw std::invalid_argument("coproduct restricted to n <= 20");
  std::vector<std::pair<SimpleGraph, SimpleGraph>> out;
  out.reserve(static_cast<size_t>(1) << g.n);
  for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
    std::vector<int> in, rest;
    for (int v = 1; v <= g.n; ++v)
      ((mask >> (v - 1)) & 1u ? in : rest).push_back(v);
    out.emplace_back(induced_subgraph(g, in), induced_subgraph(g, rest));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.n) + 1);
  for (const auto& [a, b] : g.edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<char> seen(static_cast<size_t>(g.n) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  return count == g.n;
}

std::string graph_canonical_key(const SimpleGraph& g) {
  // Vertices without incident edges are interchangeable (per weight), so only
  // the edge-carrying core is relabeled.
  std::vector<int> core;
  std::vector<char> has_edge(static_cast<size_t>(g.n) + 1, 0);
  for (const auto& [a, b] : g.edges) {
    has_edge[static_cast<size_t>(a)] = 1;
    has_edge[static_cast<size_t>(b)] = 1;
  }
  std::vector<int> isolated_weights;
  for (int v = 1; v <= g.n; ++v) {
    if (has_edge[static_cast<size_t>(v)])
      core.push_back(v);
    else
      isolated_weights.push_back(g.weighted() ? g.weights[static_cast<size_t>(v) - 1] : 1);
  }
  std::sort(isolated_weights.begin(), isolated_weights.end());
  SimpleGraph h = induced_subgraph(g, core);
  if (h.n > 8) throw std::invalid_argument("exact graph canonicalization is limited to 8 core vertices");

  std::vector<int> relabel(static_cast<size_t>(h.n));
  std::iota(relabel.begin(), relabel.end(), 1);
  std::vector<std::pair<int, int>> best_edges;
  std::vector<int> best_weights;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(h.edges.size());
    for (const auto& [a, b] : h.edges) {
      int x = relabel[static_cast<size_t>(a) - 1], y = relabel[static_cast<size_t>(b) - 1];
      edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> weights(static_cast<size_t>(h.n), 1);
    if (h.weighted())
      for (int v = 1; v <= h.n; ++v)
        weights[static_cast<size_t>(relabel[static_cast<size_t>(v) - 1]) - 1] =
            h.weights[static_cast<size_t>(v) - 1];
    if (first || std::tie(edges, weights) < std::tie(best_edges, best_weights)) {
      best_edges = std::move(edges);
      best_weights = std::move(weights);
      first = false;
    }
  } while (std::next_permutation(relabel.begin(), relabel.end()));

  std::ostringstream key;
  key << "n" << g.n << ";iso";
  for (int w : isolated_weights) key << ' ' << w;
  key << ";e";
  for (const auto& [a, b] : best_edges) key << ' ' << a << '-' << b;
  if (g.weighted()) {
    key << ";w";
    for (int w : best_weights) key << ' ' << w;
  }
  return key.str();
}

std::string graph_to_json(const SimpleGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  j["edges"] = edges;
  if (g.weighted()) j["weights"] = g.weights;
  return j.dump();
}

SimpleGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json: need n and edges");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph json: bad edge");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<int> weights;
  if (j.contains("weights")) weights = j["weights"].get<std::vector<int>>();
  return make_graph(j["n"].get<int>(), std::move(edges), std::move(weights));
}

}  // namespace glw
