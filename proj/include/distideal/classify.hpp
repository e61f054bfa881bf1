#pragma once

#include <vector>

#include "distideal/graph.hpp"
#include "distideal/polynomial.hpp"

namespace distideal {

// Structural deciders, written without the pattern matcher.
bool is_complete(const Graph& g);
/// Connected, bipartite by BFS parity, and every cross pair adjacent.
bool is_complete_bipartite(const Graph& g);
/// One vertex adjacent to all others, no other edges (K2 counts).
bool is_star(const Graph& g);

/// Patterns whose absence characterises "at most one trivial ideal".
std::vector<Pattern> forbidden_patterns(CoefficientRing ring);

struct ClassificationReport {
  Graph graph;
  CoefficientRing ring;
  /// min(Phi, 2).
  std::size_t phi;
  bool ideal_based;
  bool forbidden_based;
  bool structural;

  bool agree() const { return ideal_based == forbidden_based && forbidden_based == structural; }
};

/// Over Z: Phi <= 1; {P4, paw, diamond}-free; complete or complete bipartite.
ClassificationReport classify_integers(const Graph& g);
/// Over Q (standing in for R): adds C4 to the patterns; complete or star.
ClassificationReport classify_reals(const Graph& g);
ClassificationReport classify(const Graph& g, CoefficientRing ring);

struct MinimalityCheck {
  Pattern pattern;
  std::size_t phi;
  /// Connected proper induced subgraphs, all of which must have Phi <= 1.
  std::size_t subgraphs_checked;
  bool subgraphs_allowed;
  /// Corpus graphs containing the pattern, all of which must have Phi >= 2.
  std::size_t supergraphs_checked;
  bool supergraphs_forbidden;

  bool ok() const { return phi == 2 && subgraphs_allowed && supergraphs_forbidden; }
};

struct SizeSummary {
  std::size_t order;
  std::size_t graphs = 0;
  std::size_t passing = 0;
  std::size_t disagreements = 0;
};

struct CorpusReport {
  std::size_t n_max;
  CoefficientRing ring;
  /// Corpus order.
  std::vector<ClassificationReport> reports;
  /// Indexed by order - 1.
  std::vector<SizeSummary> sizes;
  std::vector<MinimalityCheck> minimality;

  std::size_t graphs() const { return reports.size(); }
  std::size_t passing() const;
  std::size_t disagreements() const;
  bool ok() const;
};

/// Worker count from DISTIDEAL_JOBS, else the hardware concurrency.
std::size_t default_jobs();

/// Classifies every connected graph on 1..n_max vertices (n_max <= 7) on
/// `jobs` threads (0 picks default_jobs()) and checks pattern minimality.
CorpusReport corpus_report(std::size_t n_max, CoefficientRing ring, std::size_t jobs = 0);

}  // namespace distideal
