#include "distideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace distideal {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n, 0) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  if (n > kMaxVertices) {
    throw std::invalid_argument("graph has " + std::to_string(n) + " vertices; at most " +
                                std::to_string(kMaxVertices) + " supported");
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adjacency_[u] |= std::uint64_t{1} << v;
    adjacency_[v] |= std::uint64_t{1} << u;
  }
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (auto row : adjacency_) twice += std::popcount(row);
  return twice / 2;
}

std::size_t Graph::degree(Vertex u) const { return std::popcount(adjacency_[u]); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = u + 1; v < order(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Edge> sub;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent(vertices[a], vertices[b])) sub.emplace_back(a, b);
    }
  }
  return Graph(vertices.size(), sub);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

namespace {

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

void add_clique(std::vector<Edge>& edges, std::size_t first, std::size_t count) {
  for (std::size_t u = first; u < first + count; ++u) {
    for (std::size_t v = u + 1; v < first + count; ++v) edges.emplace_back(u, v);
  }
}

void add_biclique(std::vector<Edge>& edges, std::size_t first_a, std::size_t count_a,
                  std::size_t first_b, std::size_t count_b) {
  for (std::size_t u = first_a; u < first_a + count_a; ++u) {
    for (std::size_t v = first_b; v < first_b + count_b; ++v) edges.emplace_back(u, v);
  }
}

}  // namespace

Graph complete_graph(std::size_t n) {
  require_positive(n, "complete graph order");
  std::vector<Edge> edges;
  add_clique(edges, 0, n);
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  require_positive(m, "part size");
  require_positive(n, "part size");
  std::vector<Edge> edges;
  add_biclique(edges, 0, m, m, n);
  return Graph(m + n, edges);
}

Graph complete_tripartite(std::size_t m, std::size_t n, std::size_t o) {
  require_positive(m, "part size");
  require_positive(n, "part size");
  require_positive(o, "part size");
  std::vector<Edge> edges;
  add_biclique(edges, 0, m, m, n);
  add_biclique(edges, 0, m, m + n, o);
  add_biclique(edges, m, n, m + n, o);
  return Graph(m + n + o, edges);
}

Graph join_split(std::size_t n, std::size_t m, std::size_t o) {
  require_positive(n, "independent part size");
  require_positive(m, "clique size");
  require_positive(o, "clique size");
  std::vector<Edge> edges;
  add_clique(edges, n, m);
  add_clique(edges, n + m, o);
  add_biclique(edges, 0, n, n, m + o);
  return Graph(n + m + o, edges);
}

Graph star(std::size_t leaves) {
  require_positive(leaves, "leaf count");
  std::vector<Edge> edges;
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) edges.emplace_back(leaf, leaves);
  return Graph(leaves + 1, edges);
}

Graph path(std::size_t n) {
  require_positive(n, "path order");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, edges);
}

Graph family(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  std::vector<std::size_t> args;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(parts[k].data(), parts[k].data() + parts[k].size(), value);
    if (ec != std::errc{} || ptr != parts[k].data() + parts[k].size()) {
      throw std::invalid_argument("bad family parameter '" + std::string(parts[k]) + "'");
    }
    args.push_back(value);
  }
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw std::invalid_argument("family '" + std::string(parts[0]) + "' takes " +
                                  std::to_string(count) + " parameter(s)");
    }
  };
  const auto kind = parts[0];
  if (kind == "complete") return expect(1), complete_graph(args[0]);
  if (kind == "complete_bipartite") return expect(2), complete_bipartite(args[0], args[1]);
  if (kind == "complete_tripartite") {
    return expect(3), complete_tripartite(args[0], args[1], args[2]);
  }
  if (kind == "join_split") return expect(3), join_split(args[0], args[1], args[2]);
  if (kind == "star") return expect(1), star(args[0]);
  if (kind == "path") return expect(1), path(args[0]);
  if (kind == "cycle") return expect(1), cycle(args[0]);
  throw std::invalid_argument("unknown graph family '" + std::string(kind) + "'");
}

unsigned DistanceMatrix::diameter() const {
  unsigned best = 0;
  for (auto d : entries_) best = std::max(best, d);
  return best;
}

namespace {

// BFS distances from `source`; unreachable vertices keep `unreached`.
std::vector<unsigned> bfs(const Graph& g, Vertex source, unsigned unreached) {
  std::vector<unsigned> dist(g.order(), unreached);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (auto rest = g.neighbours(u); rest != 0; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      if (dist[v] == unreached) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

constexpr unsigned kUnreached = ~0U;

}  // namespace

bool is_connected(const Graph& g) {
  auto dist = bfs(g, 0, kUnreached);
  return std::ranges::none_of(dist, [](unsigned d) { return d == kUnreached; });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const auto n = g.order();
  std::vector<unsigned> entries;
  entries.reserve(n * n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = bfs(g, u, kUnreached);
    if (std::ranges::any_of(row, [](unsigned d) { return d == kUnreached; })) {
      throw std::domain_error("distance matrix undefined: graph is disconnected");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(entries));
}

std::vector<unsigned> transmissions(const Graph& g) {
  auto d = all_pairs_distances(g);
  std::vector<unsigned> out(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) out[u] += d(u, v);
  }
  return out;
}

bool is_distance_hereditary(const Graph& g) {
  const auto n = g.order();
  const auto full = all_pairs_distances(g);
  for (std::size_t k = 2; k <= n; ++k) {
    bool ok = true;
    for_each_subset(n, k, [&](std::span<const Vertex> subset) {
      if (!ok) return;
      auto h = g.induced(subset);
      if (!is_connected(h)) return;
      auto dh = all_pairs_distances(h);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          if (dh(a, b) != full(subset[a], subset[b])) ok = false;
        }
      }
    });
    if (!ok) return false;
  }
  return true;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(std::span<const Vertex>)>& visit) {
  if (k > n) return;
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{0});
  while (true) {
    visit(subset);
    // Advance to the next combination in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && subset[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++subset[pos - 1];
    for (std::size_t j = pos; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// --- isomorphism ----------------------------------------------------------

namespace {

constexpr std::size_t kMaxCanonicalVertices = 11;

// Bit index of the pair (i, j), i < j, in graph6 column order.
constexpr std::size_t pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

// Code of the relabelled graph whose vertex a is old vertex perm[a].
std::uint64_t permuted_code(std::span<const std::uint64_t> adjacency,
                            std::span<const Vertex> perm) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < perm.size(); ++j) {
    const auto row = adjacency[perm[j]];
    for (std::size_t i = 0; i < j; ++i) {
      if ((row >> perm[i]) & 1U) code |= std::uint64_t{1} << pair_bit(i, j);
    }
  }
  return code;
}

std::vector<std::uint64_t> rows_of(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order());
  for (Vertex u = 0; u < g.order(); ++u) rows[u] = g.neighbours(u);
  return rows;
}

// Visits every permutation that lists vertices by non-increasing degree
// (ties in any order). `visit` returns false to stop early.
template <class Visit>
void for_each_degree_ordered_perm(std::span<const std::uint64_t> adjacency, Visit&& visit) {
  const auto n = adjacency.size();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::ranges::stable_sort(perm, [&](Vertex a, Vertex b) {
    return std::popcount(adjacency[a]) > std::popcount(adjacency[b]);
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && std::popcount(adjacency[perm[end]]) == std::popcount(adjacency[perm[start]])) {
      ++end;
    }
    blocks.emplace_back(start, end);
    start = end;
  }
  // Odometer over per-block permutations; each block starts sorted.
  while (true) {
    if (!visit(std::span<const Vertex>(perm))) return;
    std::size_t b = blocks.size();
    while (b > 0) {
      auto [lo, hi] = blocks[b - 1];
      if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) break;
      --b;  // block wrapped around to sorted order; carry into the previous one
    }
    if (b == 0) return;
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices) {
    throw std::invalid_argument("canonical form limited to 11 vertices");
  }
  auto rows = rows_of(g);
  std::uint64_t best = ~std::uint64_t{0};
  for_each_degree_ordered_perm(rows, [&](std::span<const Vertex> perm) {
    best = std::min(best, permuted_code(rows, perm));
    return true;
  });
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

bool contains_induced(const Graph& g, const Graph& pattern) {
  const auto k = pattern.order();
  if (k > g.order()) return false;
  const auto target = canonical_code(pattern);
  const auto edges = pattern.size();
  bool found = false;
  for_each_subset(g.order(), k, [&](std::span<const Vertex> subset) {
    if (found) return;
    auto h = g.induced(subset);
    if (h.size() == edges && canonical_code(h) == target) found = true;
  });
  return found;
}

Graph pattern_graph(Pattern p) {
  switch (p) {
    case Pattern::p4:
      return Graph(4, {{0, 1}, {1, 2}, {2, 3}});
    case Pattern::paw:
      return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    case Pattern::diamond:
      return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    case Pattern::c4:
      return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case Pattern::k5_minus_p2:
      // K5 without the two edges of the path 2-0-3.
      return Graph(5, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    case Pattern::k6_minus_m2:
      // K6 without the matching {0-3, 1-2}.
      return Graph(6, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                       {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    case Pattern::ltimes:
      return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}});
    case Pattern::dart:
      return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}});
  }
  throw std::invalid_argument("unknown pattern");
}

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::p4: return "P4";
    case Pattern::paw: return "paw";
    case Pattern::diamond: return "diamond";
    case Pattern::c4: return "C4";
    case Pattern::k5_minus_p2: return "K5-P2";
    case Pattern::k6_minus_m2: return "K6-M2";
    case Pattern::ltimes: return "ltimes";
    case Pattern::dart: return "dart";
  }
  return "?";
}

bool contains_induced(const Graph& g, Pattern p) { return contains_induced(g, pattern_graph(p)); }

// --- corpus ---------------------------------------------------------------

void for_each_connected(std::size_t n_max, const std::function<void(const Graph&)>& visit) {
  if (n_max < 1 || n_max > 7) throw std::out_of_range("corpus size must be in [1, 7]");
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::uint64_t> rows(n);
    std::vector<Edge> edges;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      std::ranges::fill(rows, 0);
      for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if ((code >> pair_bit(i, j)) & 1U) {
            rows[i] |= std::uint64_t{1} << j;
            rows[j] |= std::uint64_t{1} << i;
          }
        }
      }
      // A representative lists its vertices by non-increasing degree.
      bool sorted = true;
      for (std::size_t u = 1; u < n && sorted; ++u) {
        sorted = std::popcount(rows[u - 1]) >= std::popcount(rows[u]);
      }
      if (!sorted) continue;
      // Connectivity by frontier expansion over bitmasks.
      std::uint64_t seen = 1, frontier = 1;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (auto f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen != (std::uint64_t{1} << n) - 1) continue;
      bool minimal = true;
      for_each_degree_ordered_perm(rows, [&](std::span<const Vertex> perm) {
        if (permuted_code(rows, perm) < code) minimal = false;
        return minimal;
      });
      if (!minimal) continue;
      edges.clear();
      for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if ((code >> pair_bit(i, j)) & 1U) edges.emplace_back(i, j);
        }
      }
      visit(Graph(n, edges));
    }
  }
}

std::vector<Graph> enumerate_connected(std::size_t n_max) {
  std::vector<Graph> out;
  for_each_connected(n_max, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace distideal
