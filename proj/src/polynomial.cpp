#include "distideal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace distideal {

std::string_view ring_symbol(CoefficientRing ring) {
  return ring == CoefficientRing::integers ? "Z" : "Q";
}

// --- Monomial -------------------------------------------------------------

Monomial Monomial::variable(std::size_t index, Exponent power) {
  if (index >= kMaxVariables) throw std::out_of_range("variable index beyond kMaxVariables");
  Monomial m;
  m.exponents_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (exponents_[v] > other.exponents_[v]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < kMaxVariables; ++v) out.exponents_[v] -= divisor.exponents_[v];
  out.degree_ -= divisor.degree_;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t v = 0; v < kMaxVariables; ++v) exponents_[v] += other.exponents_[v];
  degree_ += other.degree_;
  return *this;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    out.exponents_[v] = std::max(a.exponents_[v], b.exponents_[v]);
    out.degree_ += out.exponents_[v];
  }
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (a.exponents_[v] != 0 && b.exponents_[v] != 0) return false;
  }
  return true;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder order) {
  if (order == TermOrder::grevlex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Last differing variable decides: the smaller exponent is the larger monomial.
    for (std::size_t v = kMaxVariables; v-- > 0;) {
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

// --- registry and ring ----------------------------------------------------

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  for (std::size_t a = 0; a < names_.size(); ++a) {
    if (names_[a].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t b = 0; b < a; ++b) {
      if (names_[a] == names_[b]) throw std::invalid_argument("duplicate variable " + names_[a]);
    }
  }
}

VarRegistry VarRegistry::indexed(std::string_view prefix, std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < count; ++k) names.push_back(std::string(prefix) + std::to_string(first + k));
  return VarRegistry(std::move(names));
}

std::optional<std::size_t> VarRegistry::find(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return k;
  }
  return std::nullopt;
}

std::size_t VarRegistry::index_of(std::string_view name) const {
  if (auto k = find(name)) return *k;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::string PolyRing::render(const Monomial& m) const {
  std::string out;
  for (std::size_t v = 0; v < arity(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables_.name(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

PolyRingPtr make_ring(VarRegistry variables, TermOrder order) {
  return std::make_shared<const PolyRing>(std::move(variables), order);
}

PolyRingPtr make_ring(std::vector<std::string> names, TermOrder order) {
  return make_ring(VarRegistry(std::move(names)), order);
}

PolyRingPtr indexed_ring(std::size_t count, TermOrder order) {
  return make_ring(VarRegistry::indexed("x", count), order);
}

void require_same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  if (a != b && !(*a == *b)) throw std::invalid_argument("polynomial ring mismatch");
}

// --- Polynomial -----------------------------------------------------------

namespace {

template <Coefficient C>
std::string coefficient_string(const C& c) {
  return c.get_str();
}

}  // namespace

template <Coefficient C>
Polynomial<C>::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

template <Coefficient C>
Polynomial<C>::Polynomial(PolyRingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
  const auto& r = *ring_;
  for (const auto& t : terms_) {
    for (std::size_t v = r.arity(); v < kMaxVariables; ++v) {
      if (t.monomial[v] != 0) throw std::invalid_argument("monomial uses a variable outside the ring");
    }
  }
  std::ranges::sort(terms_, [&](const Term& a, const Term& b) {
    return r.compare(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
  terms_ = std::move(merged);
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::constant(PolyRingPtr ring, const C& value) {
  Polynomial p(std::move(ring));
  if (value != 0) p.terms_.push_back({value, Monomial{}});
  return p;
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw std::out_of_range("variable index outside ring");
  Polynomial p(std::move(ring));
  p.terms_.push_back({C(1), Monomial::variable(index)});
  return p;
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::variable(PolyRingPtr ring, std::string_view name) {
  const auto index = ring->variables().index_of(name);
  return variable(std::move(ring), index);
}

template <Coefficient C>
unsigned Polynomial<C>::total_degree() const {
  unsigned best = 0;
  for (const auto& t : terms_) best = std::max(best, t.monomial.degree());
  return best;
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

template <Coefficient C>
void Polynomial<C>::add_scaled(const C& coefficient, const Monomial& monomial,
                               const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  if (other.terms_.empty() || coefficient == 0) return;
  if (&other == this) {
    const Polynomial copy = other;
    add_scaled(coefficient, monomial, copy);
    return;
  }
  const auto& r = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto mine = terms_.begin();
  auto theirs = other.terms_.begin();
  while (mine != terms_.end() && theirs != other.terms_.end()) {
    Monomial shifted = theirs->monomial * monomial;
    auto c = r.compare(mine->monomial, shifted);
    if (c == std::strong_ordering::greater) {
      out.push_back(std::move(*mine++));
    } else if (c == std::strong_ordering::less) {
      out.push_back({coefficient * theirs->coefficient, shifted});
      ++theirs;
    } else {
      C sum = mine->coefficient + coefficient * theirs->coefficient;
      if (sum != 0) out.push_back({std::move(sum), shifted});
      ++mine;
      ++theirs;
    }
  }
  for (; mine != terms_.end(); ++mine) out.push_back(std::move(*mine));
  for (; theirs != other.terms_.end(); ++theirs) {
    out.push_back({coefficient * theirs->coefficient, theirs->monomial * monomial});
  }
  terms_ = std::move(out);
}

template <Coefficient C>
Polynomial<C>& Polynomial<C>::operator+=(const Polynomial& other) {
  add_scaled(C(1), Monomial{}, other);
  return *this;
}

template <Coefficient C>
Polynomial<C>& Polynomial<C>::operator-=(const Polynomial& other) {
  add_scaled(C(-1), Monomial{}, other);
  return *this;
}

template <Coefficient C>
void Polynomial<C>::subtract_multiple(const C& coefficient, const Monomial& monomial,
                                      const Polynomial& other) {
  add_scaled(C(-coefficient), monomial, other);
}

template <Coefficient C>
Polynomial<C> Polynomial<C>::times(const C& coefficient, const Monomial& monomial) const {
  Polynomial out(ring_);
  if (coefficient == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({coefficient * t.coefficient, t.monomial * monomial});
  return out;
}

template <Coefficient C>
Polynomial<C>& Polynomial<C>::operator*=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  if (terms_.empty()) return *this;
  if (other.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (other.terms_.size() == 1) {
    return *this = times(other.terms_[0].coefficient, other.terms_[0].monomial);
  }
  if (terms_.size() == 1) {
    return *this = other.times(terms_[0].coefficient, terms_[0].monomial);
  }
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      products.push_back({a.coefficient * b.coefficient, a.monomial * b.monomial});
    }
  }
  return *this = Polynomial(ring_, std::move(products));
}

template <Coefficient C>
std::string Polynomial<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    C magnitude = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out += coefficient_string(magnitude);
    } else {
      if (magnitude != 1) out += coefficient_string(magnitude) + "*";
      out += ring_->render(t.monomial);
    }
  }
  return out;
}

template class Polynomial<Integer>;
template class Polynomial<Rational>;

// --- free functions -------------------------------------------------------

template <Coefficient C>
Polynomial<C> substitute(const Polynomial<C>& f, const std::map<std::string, C>& values) {
  const auto& ring = f.ring();
  std::vector<std::optional<C>> assigned(ring->arity());
  for (const auto& [name, value] : values) assigned[ring->variables().index_of(name)] = value;
  std::vector<typename Polynomial<C>::Term> terms;
  for (const auto& t : f.terms()) {
    C coefficient = t.coefficient;
    Monomial rest;
    for (std::size_t v = 0; v < ring->arity(); ++v) {
      const auto e = t.monomial[v];
      if (e == 0) continue;
      if (assigned[v]) {
        C power = 1;
        for (unsigned k = 0; k < e; ++k) power *= *assigned[v];
        coefficient *= power;
      } else {
        rest *= Monomial::variable(v, e);
      }
    }
    terms.push_back({std::move(coefficient), rest});
  }
  return Polynomial<C>(ring, std::move(terms));
}

template <Coefficient C>
Polynomial<C> map_variables(const Polynomial<C>& f, const PolyRingPtr& target,
                            std::span<const Polynomial<C>> images) {
  if (images.size() != f.ring()->arity()) throw std::invalid_argument("one image per variable required");
  for (const auto& image : images) require_same_ring(image.ring(), target);
  Polynomial<C> out(target);
  for (const auto& t : f.terms()) {
    auto term = Polynomial<C>::constant(target, t.coefficient);
    for (std::size_t v = 0; v < images.size(); ++v) {
      for (unsigned k = 0; k < t.monomial[v]; ++k) term *= images[v];
    }
    out += term;
  }
  return out;
}

template <Coefficient C>
Polynomial<C> rename(const Polynomial<C>& f, const PolyRingPtr& target,
                     std::span<const std::size_t> index_map) {
  if (index_map.size() != f.ring()->arity()) throw std::invalid_argument("one index per variable required");
  for (auto k : index_map) {
    if (k >= target->arity()) throw std::out_of_range("renamed variable outside target ring");
  }
  std::vector<typename Polynomial<C>::Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < index_map.size(); ++v) {
      if (t.monomial[v] != 0) m *= Monomial::variable(index_map[v], t.monomial[v]);
    }
    terms.push_back({t.coefficient, m});
  }
  return Polynomial<C>(target, std::move(terms));
}

template <Coefficient C>
C evaluate(const Polynomial<C>& f, std::span<const C> point) {
  if (point.size() != f.ring()->arity()) throw std::invalid_argument("point has wrong length");
  C total = 0;
  for (const auto& t : f.terms()) {
    C value = t.coefficient;
    for (std::size_t v = 0; v < point.size(); ++v) {
      for (unsigned k = 0; k < t.monomial[v]; ++k) value *= point[v];
    }
    total += value;
  }
  return total;
}

template <Coefficient C>
std::pair<C, Polynomial<C>> content_and_normalize(const Polynomial<C>& f) {
  if (f.is_zero()) throw std::invalid_argument("content of the zero polynomial");
  C content;
  if constexpr (std::same_as<C, Integer>) {
    content = 0;
    for (const auto& t : f.terms()) content = gcd(content, t.coefficient);
    if (f.leading_coefficient() < 0) content = -content;
  } else {
    content = f.leading_coefficient();
  }
  std::vector<typename Polynomial<C>::Term> terms;
  for (const auto& t : f.terms()) {
    if constexpr (std::same_as<C, Integer>) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), t.coefficient.get_mpz_t(), content.get_mpz_t());
      terms.push_back({std::move(q), t.monomial});
    } else {
      terms.push_back({t.coefficient / content, t.monomial});
    }
  }
  return {content, Polynomial<C>(f.ring(), std::move(terms))};
}

template <Coefficient C>
Polynomial<C> divide_exact(const Polynomial<C>& f, const Polynomial<C>& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial<C> remainder = f;
  std::vector<typename Polynomial<C>::Term> quotient;
  const auto& lead = g.leading_term();
  while (!remainder.is_zero()) {
    const auto& top = remainder.leading_term();
    if (!lead.monomial.divides(top.monomial)) throw std::domain_error("inexact polynomial division");
    C q;
    if constexpr (std::same_as<C, Integer>) {
      if (!mpz_divisible_p(top.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t())) {
        throw std::domain_error("inexact polynomial division");
      }
      mpz_divexact(q.get_mpz_t(), top.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t());
    } else {
      q = top.coefficient / lead.coefficient;
    }
    const Monomial shift = top.monomial.divided_by(lead.monomial);
    quotient.push_back({q, shift});
    remainder.subtract_multiple(q, shift, g);
  }
  return Polynomial<C>(f.ring(), std::move(quotient));
}

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<RatPolynomial::Term> terms;
  for (const auto& t : f.terms()) terms.push_back({Rational(t.coefficient), t.monomial});
  return RatPolynomial(f.ring(), std::move(terms));
}

// --- parser ---------------------------------------------------------------

namespace {

template <Coefficient C>
class Parser {
 public:
  Parser(const PolyRingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial<C> parse() {
    auto p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  const PolyRingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer number() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial<C> expression() {
    Polynomial<C> total(ring_);
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    while (true) {
      auto t = term();
      if (negative) {
        total -= t;
      } else {
        total += t;
      }
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        return total;
      }
    }
  }

  Polynomial<C> term() {
    auto p = power();
    while (true) {
      if (accept('*')) {
        p *= power();
      } else if (accept('/')) {
        // "x0/3": division by an integer constant only
        Integer denominator = number();
        if constexpr (std::same_as<C, Integer>) {
          fail("fractions are not integers");
        } else {
          if (denominator == 0) fail("zero denominator");
          p = p.times(Rational(1, denominator));
        }
      } else {
        return p;
      }
    }
  }

  Polynomial<C> power() {
    auto base = factor();
    if (accept('^')) {
      auto e = number();
      if (!e.fits_uint_p()) fail("exponent too large");
      auto result = Polynomial<C>::constant(ring_, C(1));
      for (unsigned long k = 0; k < e.get_ui(); ++k) result *= base;
      return result;
    }
    return base;
  }

  Polynomial<C> factor() {
    skip_space();
    if (accept('(')) {
      auto inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Integer numerator = number();
      if (accept('/')) {
        Integer denominator = number();
        if constexpr (std::same_as<C, Integer>) {
          fail("fractions are not integers");
        } else {
          if (denominator == 0) fail("zero denominator");
          Rational q(numerator, denominator);
          q.canonicalize();
          return Polynomial<C>::constant(ring_, q);
        }
      }
      return Polynomial<C>::constant(ring_, C(numerator));
    }
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a term");
    return Polynomial<C>::variable(ring_, text_.substr(start, pos_ - start));
  }
};

}  // namespace

template <Coefficient C>
Polynomial<C> parse_polynomial(const PolyRingPtr& ring, std::string_view text) {
  return Parser<C>(ring, text).parse();
}

#define DISTIDEAL_INSTANTIATE(C)                                                                 \
  template Polynomial<C> substitute(const Polynomial<C>&, const std::map<std::string, C>&);      \
  template Polynomial<C> map_variables(const Polynomial<C>&, const PolyRingPtr&,                 \
                                       std::span<const Polynomial<C>>);                          \
  template Polynomial<C> rename(const Polynomial<C>&, const PolyRingPtr&,                        \
                                std::span<const std::size_t>);                                   \
  template C evaluate(const Polynomial<C>&, std::span<const C>);                                 \
  template std::pair<C, Polynomial<C>> content_and_normalize(const Polynomial<C>&);             \
  template Polynomial<C> divide_exact(const Polynomial<C>&, const Polynomial<C>&);               \
  template Polynomial<C> parse_polynomial(const PolyRingPtr&, std::string_view);

DISTIDEAL_INSTANTIATE(Integer)
DISTIDEAL_INSTANTIATE(Rational)

#undef DISTIDEAL_INSTANTIATE

}  // namespace distideal
