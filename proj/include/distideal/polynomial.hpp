#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distideal {

using Integer = mpz_class;
using Rational = mpq_class;

enum class CoefficientRing { integers, rationals };

/// "Z" or "Q".
std::string_view ring_symbol(CoefficientRing ring);

template <class C>
concept Coefficient = std::same_as<C, Integer> || std::same_as<C, Rational>;

template <Coefficient C>
inline constexpr CoefficientRing coefficient_ring_v =
    std::same_as<C, Integer> ? CoefficientRing::integers : CoefficientRing::rationals;

enum class TermOrder { grevlex, lex };

inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector. Positions past the owning ring's arity stay zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  static Monomial variable(std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t var) const { return exponents_[var]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial divided_by(const Monomial& divisor) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exponent, kMaxVariables> exponents_{};
  unsigned degree_ = 0;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder order);

/// Ordered, duplicate-free list of variable names.
class VarRegistry {
 public:
  explicit VarRegistry(std::vector<std::string> names);
  /// prefix + k for k in [first, first + count).
  static VarRegistry indexed(std::string_view prefix, std::size_t count, std::size_t first = 0);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::invalid_argument for an unknown name.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const VarRegistry&, const VarRegistry&) = default;

 private:
  std::vector<std::string> names_;
};

/// Variables plus term order; shared by every polynomial of a computation.
class PolyRing {
 public:
  explicit PolyRing(VarRegistry variables, TermOrder order = TermOrder::grevlex)
      : variables_(std::move(variables)), order_(order) {}

  const VarRegistry& variables() const { return variables_; }
  std::size_t arity() const { return variables_.size(); }
  TermOrder order() const { return order_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return distideal::compare(a, b, order_);
  }
  std::string render(const Monomial& m) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  VarRegistry variables_;
  TermOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(VarRegistry variables, TermOrder order = TermOrder::grevlex);
PolyRingPtr make_ring(std::vector<std::string> names, TermOrder order = TermOrder::grevlex);
/// Ring in x0 .. x{count-1}.
PolyRingPtr indexed_ring(std::size_t count, TermOrder order = TermOrder::grevlex);

/// Throws std::invalid_argument when the two rings differ.
void require_same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

/// Sparse polynomial with terms kept strictly descending in the ring's
/// term order and no zero coefficients.
template <Coefficient C>
class Polynomial {
 public:
  using coefficient_type = C;

  struct Term {
    C coefficient;
    Monomial monomial;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(PolyRingPtr ring);
  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);

  static Polynomial constant(PolyRingPtr ring, const C& value);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial variable(PolyRingPtr ring, std::string_view name);

  const PolyRingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }

  const Term& leading_term() const { return terms_.front(); }
  const C& leading_coefficient() const { return terms_.front().coefficient; }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  unsigned total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  /// coefficient * monomial * this
  Polynomial times(const C& coefficient, const Monomial& monomial = {}) const;
  /// this -= coefficient * monomial * other, by a single merge pass.
  void subtract_multiple(const C& coefficient, const Monomial& monomial, const Polynomial& other);
  /// Removes the leading term; precondition !is_zero().
  void drop_leading_term() { terms_.erase(terms_.begin()); }

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.terms_ == b.terms_;
  }

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;

  void add_scaled(const C& coefficient, const Monomial& monomial, const Polynomial& other);
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

extern template class Polynomial<Integer>;
extern template class Polynomial<Rational>;

/// Partial evaluation; unassigned variables stay symbolic. Unknown names throw.
template <Coefficient C>
Polynomial<C> substitute(const Polynomial<C>& f, const std::map<std::string, C>& values);

/// Ring homomorphism sending variable k of f's ring to images[k] (all in `target`).
template <Coefficient C>
Polynomial<C> map_variables(const Polynomial<C>& f, const PolyRingPtr& target,
                            std::span<const Polynomial<C>> images);

/// Sends variable k to target variable index_map[k].
template <Coefficient C>
Polynomial<C> rename(const Polynomial<C>& f, const PolyRingPtr& target,
                     std::span<const std::size_t> index_map);

/// Full evaluation at a point (one value per variable).
template <Coefficient C>
C evaluate(const Polynomial<C>& f, std::span<const C> point);

/// Over Z: content is the gcd of the coefficients, signed so the returned
/// primitive part has a positive leading coefficient. Over Q: content is
/// the leading coefficient and the returned part is monic. Zero throws.
template <Coefficient C>
std::pair<C, Polynomial<C>> content_and_normalize(const Polynomial<C>& f);

/// Exact quotient f / g; throws std::domain_error when g does not divide f.
template <Coefficient C>
Polynomial<C> divide_exact(const Polynomial<C>& f, const Polynomial<C>& g);

RatPolynomial to_rational(const IntPolynomial& f);

/// Parses the rendering produced by to_string(), plus parentheses and '^'.
template <Coefficient C>
Polynomial<C> parse_polynomial(const PolyRingPtr& ring, std::string_view text);

}  // namespace distideal
