#include "distideal/classify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "distideal/ideals.hpp"

namespace distideal {

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(u) != n - 1) return false;
  }
  return true;
}

bool is_complete_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return false;
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue{0};
  side[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v = 0; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      if (side[v] == -1) {
        side[v] = 1 - side[u];
        queue.push_back(v);
      } else if (side[v] == side[u]) {
        return false;
      }
    }
  }
  if (queue.size() != n) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((side[u] != side[v]) != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) == n - 1) return true;
  }
  return false;
}

std::vector<Pattern> forbidden_patterns(CoefficientRing ring) {
  std::vector<Pattern> out{Pattern::p4, Pattern::paw, Pattern::diamond};
  if (ring == CoefficientRing::rationals) out.push_back(Pattern::c4);
  return out;
}

namespace {

std::size_t capped_phi(const Graph& g, CoefficientRing ring, std::size_t cap) {
  return ring == CoefficientRing::integers ? trivial_count_phi<Integer>(g, cap)
                                           : trivial_count_phi<Rational>(g, cap);
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("classification needs a connected graph");
}

}  // namespace

ClassificationReport classify(const Graph& g, CoefficientRing ring) {
  require_connected(g);
  ClassificationReport r{g, ring, capped_phi(g, ring, 2), false, true, false};
  r.ideal_based = r.phi <= 1;
  for (auto p : forbidden_patterns(ring)) {
    if (contains_induced(g, p)) {
      r.forbidden_based = false;
      break;
    }
  }
  r.structural = ring == CoefficientRing::integers ? is_complete(g) || is_complete_bipartite(g)
                                                   : is_complete(g) || is_star(g);
  return r;
}

ClassificationReport classify_integers(const Graph& g) { return classify(g, CoefficientRing::integers); }

ClassificationReport classify_reals(const Graph& g) { return classify(g, CoefficientRing::rationals); }

std::size_t CorpusReport::passing() const {
  return static_cast<std::size_t>(std::ranges::count_if(reports, [](const auto& r) { return r.ideal_based; }));
}

std::size_t CorpusReport::disagreements() const {
  return static_cast<std::size_t>(std::ranges::count_if(reports, [](const auto& r) { return !r.agree(); }));
}

bool CorpusReport::ok() const {
  return disagreements() == 0 &&
         std::ranges::all_of(minimality, [](const MinimalityCheck& m) { return m.ok(); });
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("DISTIDEAL_JOBS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

MinimalityCheck check_minimality(Pattern p, CoefficientRing ring,
                                 const std::vector<ClassificationReport>& corpus) {
  const Graph pattern = pattern_graph(p);
  MinimalityCheck check{p, capped_phi(pattern, ring, pattern.order()), 0, true, 0, true};
  for (std::size_t k = 1; k < pattern.order(); ++k) {
    for_each_subset(pattern.order(), k, [&](std::span<const Vertex> subset) {
      const Graph sub = pattern.induced(subset);
      if (!is_connected(sub)) return;
      ++check.subgraphs_checked;
      if (capped_phi(sub, ring, 2) > 1) check.subgraphs_allowed = false;
    });
  }
  for (const auto& r : corpus) {
    if (r.graph.order() < pattern.order() || !contains_induced(r.graph, pattern)) continue;
    ++check.supergraphs_checked;
    if (r.phi < 2) check.supergraphs_forbidden = false;
  }
  return check;
}

}  // namespace

CorpusReport corpus_report(std::size_t n_max, CoefficientRing ring, std::size_t jobs) {
  if (n_max < 1 || n_max > 7) throw std::out_of_range("corpus_report: n_max must be in 1..7");
  const auto graphs = enumerate_connected(n_max);
  std::vector<std::optional<ClassificationReport>> slots(graphs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < graphs.size();) {
      try {
        slots[k] = classify(graphs[k], ring);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(jobs == 0 ? default_jobs() : jobs, graphs.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  CorpusReport report{n_max, ring, {}, {}, {}};
  for (std::size_t n = 1; n <= n_max; ++n) report.sizes.push_back(SizeSummary{n});
  for (auto& slot : slots) {
    auto& size = report.sizes[slot->graph.order() - 1];
    ++size.graphs;
    size.passing += slot->ideal_based ? 1 : 0;
    size.disagreements += slot->agree() ? 0 : 1;
    report.reports.push_back(std::move(*slot));
  }
  for (auto p : forbidden_patterns(ring)) {
    report.minimality.push_back(check_minimality(p, ring, report.reports));
  }
  return report;
}

}  // namespace distideal
