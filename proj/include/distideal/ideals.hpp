#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distideal/graph.hpp"
#include "distideal/groebner.hpp"
#include "distideal/polynomial.hpp"

namespace distideal {

/// Square matrix of integer polynomials over a shared ring.
class SymbolicMatrix {
 public:
  SymbolicMatrix(PolyRingPtr ring, std::size_t n);

  const PolyRingPtr& ring() const { return ring_; }
  std::size_t size() const { return n_; }
  IntPolynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const IntPolynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  /// Rows and columns in the given order.
  SymbolicMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  /// One "[a b c]" line per row, each column right-aligned to its widest cell.
  std::string render() const;

 private:
  PolyRingPtr ring_;
  std::size_t n_;
  std::vector<IntPolynomial> entries_;
};

/// diag(x0..x{n-1}) + D(G). Throws std::domain_error for a disconnected graph.
SymbolicMatrix generalized_distance_matrix(const Graph& g);

/// Fraction-free elimination with exact polynomial division.
IntPolynomial det_bareiss(const SymbolicMatrix& m);
/// Cofactor expansion memoized over column subsets.
IntPolynomial det_laplace(const SymbolicMatrix& m);

/// Thrown when a minor enumeration exceeds the default size bounds.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct MinorLimits {
  bool allow_large = false;
};

/// Default bounds: n <= 8, and i <= 4 or i >= n - 1.
bool within_default_limits(std::size_t n, std::size_t i);

/// Nonzero i x i minors, deduplicated up to sign and signed to a positive
/// leading coefficient, ordered by (row subset, column subset). i = 0
/// yields {1}.
std::vector<IntPolynomial> minors(const SymbolicMatrix& m, std::size_t i, MinorLimits limits = {});

template <Coefficient C>
struct DistanceIdealResult {
  Graph graph;
  std::size_t index;
  CoefficientRing ring;
  Ideal<C> ideal;
  bool trivial;
};

/// I_i(G) over Z or Q. Throws std::out_of_range for i > n and
/// std::domain_error for a disconnected graph.
template <Coefficient C>
DistanceIdealResult<C> distance_ideal(const Graph& g, std::size_t i, MinorLimits limits = {});

/// Largest i with I_i(G) trivial, or 0 when none is. With `cap` the search
/// stops at i = cap, so the result is min(Phi, cap).
template <Coefficient C>
std::size_t trivial_count_phi(const Graph& g, std::optional<std::size_t> cap = std::nullopt,
                              MinorLimits limits = {});

/// Nonnegative generator of I_i(G) evaluated at x = point, i.e. the gcd of
/// the i x i minors of D(G) + diag(point).
Integer evaluate_ideal(const Graph& g, std::size_t i, std::span<const Integer> point);

struct IntegerRoot {
  Integer value;
  unsigned multiplicity;
  friend bool operator==(const IntegerRoot&, const IntegerRoot&) = default;
};

struct CharPoly {
  /// Monic, in the single variable "lambda".
  IntPolynomial polynomial;
  /// Ascending.
  std::vector<IntegerRoot> integer_roots;
};

/// det(lambda*I - D(G)), i.e. det D(G, X) at x_u = -lambda up to the sign (-1)^n.
CharPoly char_poly_distance(const Graph& g);

extern template struct DistanceIdealResult<Integer>;
extern template struct DistanceIdealResult<Rational>;

}  // namespace distideal
