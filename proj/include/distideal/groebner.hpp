#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "distideal/polynomial.hpp"

namespace distideal {

/// Completed Groebner basis. Over Q the basis is reduced and monic. Over Z
/// it is a reduced strong basis: positive leading coefficients, tails in
/// normal form with respect to the other elements.
template <Coefficient C>
struct GroebnerBasis {
  static constexpr CoefficientRing coefficient_ring = coefficient_ring_v<C>;

  PolyRingPtr ring;
  /// Descending by leading monomial.
  std::vector<Polynomial<C>> elements;
  bool reduced = true;

  TermOrder order() const { return ring->order(); }
  /// True iff the basis is {1}.
  bool is_unit() const;
};

/// Normal form of f. Over Q a term is reducible when some leading monomial
/// divides it. Over Z the leading monomial must divide it and the
/// coefficient must lie outside [0, |lc|); the coefficient is replaced by
/// its non-negative remainder, so an exactly divisible term vanishes.
template <Coefficient C>
Polynomial<C> reduce(const Polynomial<C>& f, std::span<const Polynomial<C>> basis);

template <Coefficient C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g);

/// u*(L/lm f)*f + v*(L/lm g)*g with u*lc(f) + v*lc(g) = gcd(lc f, lc g).
IntPolynomial gcd_polynomial(const IntPolynomial& f, const IntPolynomial& g);

/// Buchberger completion with the coprime and chain criteria; over Z the
/// gcd-polynomials are added alongside the S-polynomials. Pairs are taken
/// smallest lcm first, ties broken by element index.
template <Coefficient C>
GroebnerBasis<C> groebner_basis(const PolyRingPtr& ring, std::span<const Polynomial<C>> generators);

/// Polynomial ideal with a lazily completed, shared Groebner basis.
template <Coefficient C>
class Ideal {
 public:
  /// Zero generators are dropped. Generators must share `ring`.
  Ideal(PolyRingPtr ring, std::vector<Polynomial<C>> generators);

  const PolyRingPtr& ring() const { return ring_; }
  std::span<const Polynomial<C>> generators() const { return generators_; }
  bool has_unit_generator() const;

  /// Completed on first use; copies of an Ideal share the result.
  const GroebnerBasis<C>& basis() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis<C>> basis;
  };

  PolyRingPtr ring_;
  std::vector<Polynomial<C>> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using IntIdeal = Ideal<Integer>;
using RatIdeal = Ideal<Rational>;

/// Unit-generator shortcut first, then the completed basis.
template <Coefficient C>
bool is_trivial(const Ideal<C>& ideal);

template <Coefficient C>
bool contains(const Ideal<C>& ideal, const Polynomial<C>& f);

/// Mutual containment of generator lists.
template <Coefficient C>
bool ideals_equal(const Ideal<C>& a, const Ideal<C>& b);

struct BasisCheck {
  bool generators_reduce = true;
  bool s_polynomials_reduce = true;
  bool gcd_polynomials_reduce = true;
  bool normalized = true;
  std::size_t pairs_checked = 0;

  bool ok() const {
    return generators_reduce && s_polynomials_reduce && gcd_polynomials_reduce && normalized;
  }
};

/// Recomputes every S-polynomial (and gcd-polynomial over Z) of the basis
/// and every generator's normal form.
template <Coefficient C>
BasisCheck verify_basis(const GroebnerBasis<C>& basis, std::span<const Polynomial<C>> generators);

extern template class Ideal<Integer>;
extern template class Ideal<Rational>;

}  // namespace distideal
