#pragma once

#include <string>
#include <utility>
#include <vector>

#include "glw/permutation.hpp"

namespace glw {

// Undirected simple graph on vertices {1..n}, optionally vertex-weighted.
// Edges are stored as (a, b) with a < b, sorted and duplicate-free.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> weights;  // empty, or one weight >= 1 per vertex

  bool weighted() const { return !weights.empty(); }
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

// Normalizes and validates: sorts edges, rejects loops, duplicates and
// out-of-range endpoints.
SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges,
                       std::vector<int> weights = {});

// One vertex per cycle (numbered by increasing minimal cycle element); an
// edge joins two cycles that interlace along the base line.
SimpleGraph intersection_graph(const Permutation& a);
// Same graph with each vertex weighted by its cycle length.
SimpleGraph weighted_intersection_graph(const Permutation& a);

// u sorted subset of {1..n}; vertices renumbered in increasing order.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& u);

// All 2^n ordered splits (G|_I, G|_J), I in subset-mask order.
std::vector<std::pair<SimpleGraph, SimpleGraph>> graph_coproduct(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

// Isomorphism-invariant key: isolated vertices counted apart, the rest
// canonicalized by brute force over vertex relabelings (needs <= 8
// non-isolated vertices). Weights participate in the relabeling.
std::string graph_canonical_key(const SimpleGraph& g);

std::string graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const std::string& text);

}  // namespace glw
