#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spreadkit/complex.hpp"

namespace spreadkit {

/// Simple graph on vertices 1..n_vertices; no loops, no duplicate edges.
struct Graph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // canonical: u < v, sorted

  static Graph make(int n_vertices, std::vector<std::pair<int, int>> edges);

  /// adjacency[v-1] = bitmask of neighbours of v.
  std::vector<std::uint64_t> adjacency_masks() const;
};

/// Facet file: one facet per line of whitespace-separated elements, '#'
/// comments, optional leading "n <N>" header fixing a ground size larger than
/// the maximum element.
Complex parse_facets(std::string_view text);
std::string to_facet_text(const Complex& cx);

/// Edge-list file: "u v" lines, optional leading "p <n> <m>" header, '#'
/// comments. Duplicate edges collapse; self-loops are rejected.
Graph parse_graph(std::string_view text);
std::string to_graph_text(const Graph& g);

/// Facets = maximal independent sets of g (maximal cliques of the complement).
Complex independence_complex(const Graph& g);

/// The complete complex: single facet [n].
Complex gen_complete(int n);

/// G(n,p) with the fixed generator; routed through independence_complex.
Graph gen_gnp_graph(int n, double p, std::uint64_t seed);
Complex gen_gnp_complex(int n, double p, std::uint64_t seed);

struct RandomFacetsParams {
  int ground_n = 0;
  int count = 0;
  int size_min = 0;
  int size_max = 0;
};

/// `count` random facet candidates with sizes uniform in [size_min, size_max],
/// canonicalized into an antichain (the result may have fewer facets).
Complex gen_random_facets(const RandomFacetsParams& params, std::uint64_t seed);

}  // namespace spreadkit
