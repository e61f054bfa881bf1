#include "distideal/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace distideal {

namespace {

template <Coefficient C>
using Term = typename Polynomial<C>::Term;

template <Coefficient C>
struct ReductionStep {
  const Polynomial<C>* by;
  C quotient;
};

// Picks the basis element that reduces `term`. Over Z an element whose
// leading coefficient divides the term's coefficient is preferred, so the
// term vanishes instead of leaving a remainder.
template <Coefficient C>
std::optional<ReductionStep<C>> find_reducer(const Term<C>& term,
                                             std::span<const Polynomial<C>> basis) {
  if constexpr (std::same_as<C, Rational>) {
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(term.monomial)) {
        return ReductionStep<C>{&g, term.coefficient / g.leading_coefficient()};
      }
    }
    return std::nullopt;
  } else {
    std::optional<ReductionStep<C>> partial;
    for (const auto& g : basis) {
      if (g.is_zero() || !g.leading_monomial().divides(term.monomial)) continue;
      const Integer& lc = g.leading_coefficient();
      if (mpz_divisible_p(term.coefficient.get_mpz_t(), lc.get_mpz_t())) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), term.coefficient.get_mpz_t(), lc.get_mpz_t());
        return ReductionStep<C>{&g, std::move(q)};
      }
      if (partial) continue;
      Integer magnitude = abs(lc);
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), term.coefficient.get_mpz_t(), magnitude.get_mpz_t());
      if (q != 0) {
        if (lc < 0) q = -q;
        partial = ReductionStep<C>{&g, std::move(q)};
      }
    }
    return partial;
  }
}

template <Coefficient C>
void normalize_leading(Polynomial<C>& h) {
  if constexpr (std::same_as<C, Integer>) {
    if (h.leading_coefficient() < 0) h = -h;
  } else {
    if (h.leading_coefficient() != 1) h = h.times(1 / h.leading_coefficient());
  }
}

template <Coefficient C>
bool is_unit_constant(const Polynomial<C>& p) {
  if (p.is_zero() || !p.is_constant()) return false;
  if constexpr (std::same_as<C, Integer>) {
    return abs(p.leading_coefficient()) == 1;
  } else {
    return true;
  }
}

bool coefficient_divides(const Integer& a, const Integer& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

// Leading term of a divides leading term of b (coefficients included over Z).
template <Coefficient C>
bool leading_term_divides(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (!a.leading_monomial().divides(b.leading_monomial())) return false;
  if constexpr (std::same_as<C, Integer>) {
    return coefficient_divides(a.leading_coefficient(), b.leading_coefficient());
  } else {
    return true;
  }
}

template <Coefficient C>
class Completion {
 public:
  explicit Completion(PolyRingPtr ring)
      : ring_(std::move(ring)), pairs_(PairOrder{ring_.get()}) {}

  void insert(const Polynomial<C>& generator) {
    if (unit_) return;
    auto h = reduce<C>(generator, basis_);
    if (!h.is_zero()) add(std::move(h));
  }

  void run() {
    while (!unit_ && !pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (!p.gcd) pending_.erase({p.i, p.j});
      if (!p.gcd && redundant(p)) continue;
      Polynomial<C> h(ring_);
      if constexpr (std::same_as<C, Integer>) {
        h = p.gcd ? gcd_polynomial(basis_[p.i], basis_[p.j]) : s_polynomial(basis_[p.i], basis_[p.j]);
      } else {
        h = s_polynomial(basis_[p.i], basis_[p.j]);
      }
      h = reduce<C>(h, basis_);
      if (!h.is_zero()) add(std::move(h));
    }
  }

  GroebnerBasis<C> finish() && {
    GroebnerBasis<C> out{ring_, {}, true};
    if (unit_) {
      out.elements.push_back(Polynomial<C>::constant(ring_, C(1)));
      return out;
    }
    // Drop elements whose leading term is divisible by another's; among
    // identical leading terms the earliest survives.
    std::vector<Polynomial<C>> minimal;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis_.size() && !redundant; ++b) {
        if (a == b || !leading_term_divides(basis_[b], basis_[a])) continue;
        const bool same = basis_[a].leading_term() == basis_[b].leading_term();
        redundant = !same || b < a;
      }
      if (!redundant) minimal.push_back(basis_[a]);
    }
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<Polynomial<C>> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (b != a) others.push_back(minimal[b]);
      }
      const auto& lead = minimal[a].leading_term();
      auto tail = minimal[a];
      tail.drop_leading_term();
      auto reduced_tail = reduce<C>(tail, others);
      std::vector<Term<C>> terms(reduced_tail.terms().begin(), reduced_tail.terms().end());
      terms.push_back(lead);
      out.elements.emplace_back(ring_, std::move(terms));
    }
    std::ranges::sort(out.elements, [&](const Polynomial<C>& a, const Polynomial<C>& b) {
      auto c = ring_->compare(a.leading_monomial(), b.leading_monomial());
      if (c != 0) return c == std::strong_ordering::greater;
      return a.leading_coefficient() < b.leading_coefficient();
    });
    return out;
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    bool gcd;
  };

  struct PairOrder {
    const PolyRing* ring;
    bool operator()(const Pair& a, const Pair& b) const {
      if (auto c = ring->compare(a.lcm, b.lcm); c != 0) return c == std::strong_ordering::less;
      if (a.gcd != b.gcd) return a.gcd;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  PolyRingPtr ring_;
  std::vector<Polynomial<C>> basis_;
  std::set<Pair, PairOrder> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  bool unit_ = false;

  void add(Polynomial<C> h) {
    normalize_leading(h);
    if (is_unit_constant(h)) {
      unit_ = true;
      return;
    }
    const std::size_t index = basis_.size();
    basis_.push_back(std::move(h));
    const auto& fresh = basis_.back();
    for (std::size_t k = 0; k < index; ++k) {
      const auto& old = basis_[k];
      Monomial l = lcm(old.leading_monomial(), fresh.leading_monomial());
      pairs_.insert({k, index, l, false});
      pending_.insert({k, index});
      if constexpr (std::same_as<C, Integer>) {
        if (!coefficient_divides(old.leading_coefficient(), fresh.leading_coefficient()) &&
            !coefficient_divides(fresh.leading_coefficient(), old.leading_coefficient())) {
          pairs_.insert({k, index, l, true});
        }
      }
    }
  }

  // Coprime criterion, then the chain criterion.
  bool redundant(const Pair& p) const {
    const auto& f = basis_[p.i];
    const auto& g = basis_[p.j];
    bool coprime_lc = true;
    Integer lcm_lc = 1;
    if constexpr (std::same_as<C, Integer>) {
      coprime_lc = gcd(f.leading_coefficient(), g.leading_coefficient()) == 1;
      lcm_lc = lcm(f.leading_coefficient(), g.leading_coefficient());
    }
    if (coprime_lc && coprime(f.leading_monomial(), g.leading_monomial())) return true;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const auto& h = basis_[k];
      if (!h.leading_monomial().divides(p.lcm)) continue;
      if constexpr (std::same_as<C, Integer>) {
        if (!coefficient_divides(h.leading_coefficient(), lcm_lc)) continue;
      }
      auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      if (!pending_.contains(key(p.i, k)) && !pending_.contains(key(p.j, k))) return true;
    }
    return false;
  }
};

}  // namespace

template <Coefficient C>
bool GroebnerBasis<C>::is_unit() const {
  return elements.size() == 1 && is_unit_constant(elements.front());
}

template <Coefficient C>
Polynomial<C> reduce(const Polynomial<C>& f, std::span<const Polynomial<C>> basis) {
  for (const auto& g : basis) require_same_ring(f.ring(), g.ring());
  Polynomial<C> p = f;
  std::vector<Term<C>> rest;
  while (!p.is_zero()) {
    if (auto step = find_reducer<C>(p.leading_term(), basis)) {
      const Monomial shift = p.leading_monomial().divided_by(step->by->leading_monomial());
      p.subtract_multiple(step->quotient, shift, *step->by);
    } else {
      rest.push_back(p.leading_term());
      p.drop_leading_term();
    }
  }
  return Polynomial<C>(f.ring(), std::move(rest));
}

template <Coefficient C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Monomial shift_f = l.divided_by(f.leading_monomial());
  const Monomial shift_g = l.divided_by(g.leading_monomial());
  if constexpr (std::same_as<C, Integer>) {
    const Integer c = lcm(f.leading_coefficient(), g.leading_coefficient());
    Integer cf, cg;
    mpz_divexact(cf.get_mpz_t(), c.get_mpz_t(), f.leading_coefficient().get_mpz_t());
    mpz_divexact(cg.get_mpz_t(), c.get_mpz_t(), g.leading_coefficient().get_mpz_t());
    auto s = f.times(cf, shift_f);
    s.subtract_multiple(cg, shift_g, g);
    return s;
  } else {
    auto s = f.times(1 / f.leading_coefficient(), shift_f);
    s.subtract_multiple(1 / g.leading_coefficient(), shift_g, g);
    return s;
  }
}

IntPolynomial gcd_polynomial(const IntPolynomial& f, const IntPolynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("gcd-polynomial of a zero polynomial");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Integer d, u, v;
  mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), f.leading_coefficient().get_mpz_t(),
             g.leading_coefficient().get_mpz_t());
  auto out = f.times(u, l.divided_by(f.leading_monomial()));
  out += g.times(v, l.divided_by(g.leading_monomial()));
  return out;
}

template <Coefficient C>
GroebnerBasis<C> groebner_basis(const PolyRingPtr& ring, std::span<const Polynomial<C>> generators) {
  std::vector<const Polynomial<C>*> order;
  for (const auto& g : generators) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) order.push_back(&g);
  }
  if (order.empty()) return GroebnerBasis<C>{ring, {}, true};
  // Smaller leading terms first keeps the early reductions cheap.
  std::ranges::stable_sort(order, [&](const Polynomial<C>* a, const Polynomial<C>* b) {
    return ring->compare(a->leading_monomial(), b->leading_monomial()) == std::strong_ordering::less;
  });
  Completion<C> completion(ring);
  for (const auto* g : order) completion.insert(*g);
  completion.run();
  return std::move(completion).finish();
}

template <Coefficient C>
Ideal<C>::Ideal(PolyRingPtr ring, std::vector<Polynomial<C>> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

template <Coefficient C>
bool Ideal<C>::has_unit_generator() const {
  return std::ranges::any_of(generators_, [](const auto& g) { return is_unit_constant(g); });
}

template <Coefficient C>
const GroebnerBasis<C>& Ideal<C>::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = groebner_basis<C>(ring_, generators_);
  });
  return *cache_->basis;
}

template <Coefficient C>
bool is_trivial(const Ideal<C>& ideal) {
  return ideal.has_unit_generator() || ideal.basis().is_unit();
}

template <Coefficient C>
bool contains(const Ideal<C>& ideal, const Polynomial<C>& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) return true;
  if (ideal.has_unit_generator()) return true;
  const auto& basis = ideal.basis();
  return reduce<C>(f, basis.elements).is_zero();
}

template <Coefficient C>
bool ideals_equal(const Ideal<C>& a, const Ideal<C>& b) {
  require_same_ring(a.ring(), b.ring());
  for (const auto& g : b.generators()) {
    if (!contains(a, g)) return false;
  }
  for (const auto& g : a.generators()) {
    if (!contains(b, g)) return false;
  }
  return true;
}

template <Coefficient C>
BasisCheck verify_basis(const GroebnerBasis<C>& basis, std::span<const Polynomial<C>> generators) {
  BasisCheck check;
  const auto& elements = basis.elements;
  for (const auto& g : generators) {
    if (!reduce<C>(g, elements).is_zero()) check.generators_reduce = false;
  }
  for (std::size_t a = 0; a < elements.size(); ++a) {
    const auto& e = elements[a];
    if constexpr (std::same_as<C, Integer>) {
      if (e.leading_coefficient() <= 0) check.normalized = false;
    } else {
      if (e.leading_coefficient() != 1) check.normalized = false;
    }
    std::vector<Polynomial<C>> others;
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (b != a) others.push_back(elements[b]);
    }
    auto tail = e;
    tail.drop_leading_term();
    if (!(reduce<C>(tail, others) == tail)) check.normalized = false;
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      ++check.pairs_checked;
      if (!reduce<C>(s_polynomial(e, elements[b]), elements).is_zero()) {
        check.s_polynomials_reduce = false;
      }
      if constexpr (std::same_as<C, Integer>) {
        if (!reduce<C>(gcd_polynomial(e, elements[b]), elements).is_zero()) {
          check.gcd_polynomials_reduce = false;
        }
      }
    }
  }
  return check;
}

template class Ideal<Integer>;
template class Ideal<Rational>;

#define DISTIDEAL_INSTANTIATE(C)                                                                 \
  template struct GroebnerBasis<C>;                                                              \
  template Polynomial<C> reduce(const Polynomial<C>&, std::span<const Polynomial<C>>);           \
  template Polynomial<C> s_polynomial(const Polynomial<C>&, const Polynomial<C>&);               \
  template GroebnerBasis<C> groebner_basis(const PolyRingPtr&, std::span<const Polynomial<C>>);  \
  template bool is_trivial(const Ideal<C>&);                                                     \
  template bool contains(const Ideal<C>&, const Polynomial<C>&);                                 \
  template bool ideals_equal(const Ideal<C>&, const Ideal<C>&);                                  \
  template BasisCheck verify_basis(const GroebnerBasis<C>&, std::span<const Polynomial<C>>);

DISTIDEAL_INSTANTIATE(Integer)
DISTIDEAL_INSTANTIATE(Rational)

#undef DISTIDEAL_INSTANTIATE

}  // namespace distideal
