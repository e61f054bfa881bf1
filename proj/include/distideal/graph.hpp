#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distideal {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as adjacency bitsets.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse; loops and out-of-range endpoints throw
  /// std::invalid_argument.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const;
  bool adjacent(Vertex u, Vertex v) const { return (adjacency_[u] >> v) & 1U; }
  std::uint64_t neighbours(Vertex u) const { return adjacency_[u]; }
  std::size_t degree(Vertex u) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`; vertex k of the result is vertices[k].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> adjacency_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

// Family generators. Star leaves are 0..m-1 and the centre is m.
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph complete_tripartite(std::size_t m, std::size_t n, std::size_t o);
/// Complement of K_n joined to the disjoint union K_m + K_o. The n
/// independent vertices come first, then the K_m block, then K_o.
Graph join_split(std::size_t n, std::size_t m, std::size_t o);
Graph star(std::size_t leaves);
Graph path(std::size_t n);
Graph cycle(std::size_t n);

/// Parses "kind:a[:b[:c]]", e.g. "cycle:4", "complete_bipartite:2:3".
Graph family(std::string_view spec);

/// Symmetric matrix of shortest-path edge counts.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<unsigned> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t order() const { return n_; }
  unsigned operator()(Vertex u, Vertex v) const { return entries_[u * n_ + v]; }
  unsigned diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<unsigned> entries_;
};

bool is_connected(const Graph& g);

/// BFS from every vertex. Throws std::domain_error on a disconnected graph.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Row sums of the distance matrix.
std::vector<unsigned> transmissions(const Graph& g);

/// True when every connected induced subgraph keeps the distances of g.
/// Exhaustive over vertex subsets; intended for n <= 10.
bool is_distance_hereditary(const Graph& g);

// graph6 (McKay) encoding, n <= 62.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

enum class Pattern { p4, paw, diamond, c4, k5_minus_p2, k6_minus_m2, ltimes, dart };

inline constexpr Pattern kAllPatterns[] = {Pattern::p4,          Pattern::paw,
                                           Pattern::diamond,     Pattern::c4,
                                           Pattern::k5_minus_p2, Pattern::k6_minus_m2,
                                           Pattern::ltimes,      Pattern::dart};

Graph pattern_graph(Pattern p);
std::string_view pattern_name(Pattern p);

/// Canonical code of a graph with at most 11 vertices: the minimum
/// upper-triangle adjacency bitmask over the vertex orders that list
/// degrees in non-increasing order.
std::uint64_t canonical_code(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

bool contains_induced(const Graph& g, const Graph& pattern);
bool contains_induced(const Graph& g, Pattern p);

/// One representative per isomorphism class of connected graphs on
/// 1..n_max vertices (1 <= n_max <= 7), ordered by vertex count.
std::vector<Graph> enumerate_connected(std::size_t n_max);
void for_each_connected(std::size_t n_max, const std::function<void(const Graph&)>& visit);

/// Calls visit(subset) for every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(std::span<const Vertex>)>& visit);

}  // namespace distideal
