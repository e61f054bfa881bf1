#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive: full permutation searches and Leibniz expansions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "distideal/graph.hpp"
#include "distideal/ideals.hpp"
#include "distideal/snf.hpp"

namespace oracle {

using distideal::Graph;
using distideal::Integer;

inline std::uint64_t code_under(const Graph& g, const std::vector<std::size_t>& p) {
  std::uint64_t code = 0;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < g.order(); ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(p[i], p[j])) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

/// Minimum code over all n! orderings.
inline std::uint64_t brute_canonical(const Graph& g) {
  std::vector<std::size_t> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, code_under(g, p));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Graph on n vertices whose pair (i, j), i < j, is present when bit
/// j(j-1)/2 + i of `mask` is set.
inline Graph from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<distideal::Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

/// graph6 decoder written against the format description: expand every
/// data byte to six characters '0'/'1' and read pairs column by column.
inline Graph decode_graph6(const std::string& s) {
  const std::size_t n = static_cast<unsigned char>(s[0]) - 63;
  std::string bits;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const int v = static_cast<unsigned char>(s[k]) - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((v >> b) & 1) ? '1' : '0');
  }
  std::vector<distideal::Edge> edges;
  std::size_t pos = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bits.at(pos++) == '1') edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (p[a] > p[b]) sign = -sign;
    }
  }
  return sign;
}

/// Leibniz expansion; entry(r, c) must return a value of type T.
template <class T, class Entry>
T leibniz(std::size_t n, Entry entry, T zero) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total = zero;
  do {
    T term = entry(0, p[0]);
    for (std::size_t r = 1; r < n; ++r) term = term * entry(r, p[r]);
    if (permutation_sign(p) < 0) {
      total = total - term;
    } else {
      total = total + term;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Integer det(const distideal::IntegerMatrix& a) {
  if (a.rows() == 0) return 1;
  return leibniz<Integer>(a.rows(), [&](std::size_t r, std::size_t c) { return a(r, c); }, Integer(0));
}

inline distideal::IntPolynomial det(const distideal::SymbolicMatrix& m) {
  if (m.size() == 0) return distideal::IntPolynomial::constant(m.ring(), 1);
  return leibniz<distideal::IntPolynomial>(
      m.size(), [&](std::size_t r, std::size_t c) { return m(r, c); }, distideal::IntPolynomial(m.ring()));
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// gcd of all k x k minors by explicit submatrix determinants.
inline Integer gcd_of_minors(const distideal::IntegerMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  Integer g = 0;
  for (const auto& rows : subsets(a.rows(), k)) {
    for (const auto& cols : subsets(a.cols(), k)) {
      distideal::IntegerMatrix sub(k, k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) sub(r, c) = a(rows[r], cols[c]);
      }
      g = gcd(g, det(sub));
    }
  }
  return g;
}

/// Invariant factors from the gcd-of-minors chain.
inline std::vector<Integer> invariant_factors(const distideal::IntegerMatrix& a) {
  const std::size_t r = std::min(a.rows(), a.cols());
  std::vector<Integer> out;
  Integer previous = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    const Integer delta = gcd_of_minors(a, k);
    if (delta == 0) {
      out.resize(r, Integer(0));
      break;
    }
    out.push_back(delta / previous);
    previous = delta;
  }
  return out;
}

inline distideal::IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                              int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  distideal::IntegerMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = dist(rng);
  }
  return a;
}

}  // namespace oracle
