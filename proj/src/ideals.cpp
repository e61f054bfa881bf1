#include "distideal/ideals.hpp"

#include <algorithm>
#include <set>

#include "distideal/minor_table.hpp"
#include "distideal/snf.hpp"

namespace distideal {

SymbolicMatrix::SymbolicMatrix(PolyRingPtr ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), entries_(n * n, IntPolynomial(ring_)) {}

SymbolicMatrix SymbolicMatrix::submatrix(std::span<const std::size_t> rows,
                                         std::span<const std::size_t> cols) const {
  if (rows.size() != cols.size()) throw std::invalid_argument("submatrix: not square");
  SymbolicMatrix out(ring_, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
  }
  return out;
}

std::string SymbolicMatrix::render() const {
  std::vector<std::string> cells(n_ * n_);
  std::vector<std::size_t> width(n_, 0);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      cells[r * n_ + c] = (*this)(r, c).to_string();
      width[c] = std::max(width[c], cells[r * n_ + c].size());
    }
  }
  std::string out;
  for (std::size_t r = 0; r < n_; ++r) {
    out += '[';
    for (std::size_t c = 0; c < n_; ++c) {
      if (c > 0) out += ' ';
      const auto& cell = cells[r * n_ + c];
      out.append(width[c] - cell.size(), ' ');
      out += cell;
    }
    out += "]\n";
  }
  return out;
}

SymbolicMatrix generalized_distance_matrix(const Graph& g) {
  const auto d = all_pairs_distances(g);
  const std::size_t n = g.order();
  SymbolicMatrix m(indexed_ring(n), n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      m(u, v) = u == v ? IntPolynomial::variable(m.ring(), u)
                       : IntPolynomial::constant(m.ring(), Integer(d(u, v)));
    }
  }
  return m;
}

IntPolynomial det_bareiss(const SymbolicMatrix& input) {
  const std::size_t n = input.size();
  const auto& ring = input.ring();
  if (n == 0) return IntPolynomial::constant(ring, 1);
  SymbolicMatrix m = input;
  IntPolynomial previous = IntPolynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return IntPolynomial(ring);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto value = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(value, previous);
      }
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace {

MinorLevel<IntPolynomial> symbolic_minor_table(const SymbolicMatrix& m, std::size_t k) {
  return minor_table<IntPolynomial>(
      m.size(), m.size(), k,
      [&](std::size_t r, std::size_t c) -> const IntPolynomial& { return m(r, c); },
      [](const IntPolynomial& p) { return p.is_zero(); }, IntPolynomial::constant(m.ring(), 1));
}

}  // namespace

IntPolynomial det_laplace(const SymbolicMatrix& m) {
  const std::size_t n = m.size();
  auto table = symbolic_minor_table(m, n);
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((1ULL << n) - 1);
  auto it = table.find(MinorKey{full, full});
  return it == table.end() ? IntPolynomial(m.ring()) : it->second;
}

bool within_default_limits(std::size_t n, std::size_t i) {
  return n <= 8 && (i <= 4 || i + 1 >= n);
}

std::vector<IntPolynomial> minors(const SymbolicMatrix& m, std::size_t i, MinorLimits limits) {
  const std::size_t n = m.size();
  if (i > n) {
    throw std::out_of_range("minor size " + std::to_string(i) + " exceeds matrix size " +
                            std::to_string(n));
  }
  if (!limits.allow_large && !within_default_limits(n, i)) {
    throw LimitExceeded("minors of size " + std::to_string(i) + " on a " + std::to_string(n) +
                        "x" + std::to_string(n) + " matrix exceed the default bounds");
  }
  auto table = symbolic_minor_table(m, i);
  std::vector<std::pair<MinorKey, IntPolynomial>> entries(table.begin(), table.end());
  std::ranges::sort(entries, [](const auto& a, const auto& b) {
    return std::pair{a.first.rows, a.first.cols} < std::pair{b.first.rows, b.first.cols};
  });
  std::vector<IntPolynomial> out;
  std::set<std::string> seen;
  for (auto& [key, p] : entries) {
    if (p.leading_coefficient() < 0) p = -p;
    if (seen.insert(p.to_string()).second) out.push_back(std::move(p));
  }
  return out;
}

template <Coefficient C>
DistanceIdealResult<C> distance_ideal(const Graph& g, std::size_t i, MinorLimits limits) {
  const auto m = generalized_distance_matrix(g);
  auto generators = minors(m, i, limits);
  std::vector<Polynomial<C>> converted;
  converted.reserve(generators.size());
  for (auto& p : generators) {
    if constexpr (std::same_as<C, Integer>) {
      converted.push_back(std::move(p));
    } else {
      converted.push_back(to_rational(p));
    }
  }
  Ideal<C> ideal(m.ring(), std::move(converted));
  const bool trivial = is_trivial(ideal);
  return DistanceIdealResult<C>{g, i, coefficient_ring_v<C>, std::move(ideal), trivial};
}

template <Coefficient C>
std::size_t trivial_count_phi(const Graph& g, std::optional<std::size_t> cap, MinorLimits limits) {
  const std::size_t top = std::min(g.order(), cap.value_or(g.order()));
  std::size_t phi = 0;
  for (std::size_t i = 1; i <= top; ++i) {
    if (!distance_ideal<C>(g, i, limits).trivial) break;
    phi = i;
  }
  return phi;
}

Integer evaluate_ideal(const Graph& g, std::size_t i, std::span<const Integer> point) {
  if (i > g.order()) throw std::out_of_range("evaluate_ideal: index exceeds graph order");
  return minor_gcd(distance_matrix_at(g, point), i);
}

CharPoly char_poly_distance(const Graph& g) {
  const auto d = all_pairs_distances(g);
  const std::size_t n = g.order();
  auto ring = make_ring(std::vector<std::string>{"lambda"});
  SymbolicMatrix m(ring, n);
  const auto lambda = IntPolynomial::variable(ring, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      m(u, v) = u == v ? -lambda : IntPolynomial::constant(ring, Integer(d(u, v)));
    }
  }
  auto p = det_bareiss(m);
  if (n % 2 == 1) p = -p;

  CharPoly out{p, {}};
  // Peel off the root 0, then test the divisors of the lowest coefficient.
  IntPolynomial rest = p;
  unsigned zero_multiplicity = 0;
  while (!rest.is_zero() && rest.terms().back().monomial.degree() > 0) {
    rest = divide_exact(rest, lambda);
    ++zero_multiplicity;
  }
  std::vector<IntegerRoot> roots;
  if (zero_multiplicity > 0) roots.push_back({Integer(0), zero_multiplicity});
  if (!rest.is_constant()) {
    const Integer c = abs(rest.terms().back().coefficient);
    std::vector<Integer> divisors;
    for (Integer k = 1; k * k <= c; ++k) {
      if (mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) {
        divisors.push_back(k);
        if (k * k != c) divisors.push_back(c / k);
      }
    }
    for (const auto& magnitude : divisors) {
      for (const Integer& candidate : {Integer(magnitude), Integer(-magnitude)}) {
        const auto factor = lambda - IntPolynomial::constant(ring, candidate);
        unsigned multiplicity = 0;
        for (;;) {
          const std::array<Integer, 1> point{candidate};
          if (rest.is_constant() || evaluate(rest, std::span<const Integer>(point)) != 0) break;
          rest = divide_exact(rest, factor);
          ++multiplicity;
        }
        if (multiplicity > 0) roots.push_back({candidate, multiplicity});
      }
    }
  }
  std::ranges::sort(roots, [](const auto& a, const auto& b) { return a.value < b.value; });
  out.integer_roots = std::move(roots);
  return out;
}

template struct DistanceIdealResult<Integer>;
template struct DistanceIdealResult<Rational>;
template DistanceIdealResult<Integer> distance_ideal(const Graph&, std::size_t, MinorLimits);
template DistanceIdealResult<Rational> distance_ideal(const Graph&, std::size_t, MinorLimits);
template std::size_t trivial_count_phi<Integer>(const Graph&, std::optional<std::size_t>, MinorLimits);
template std::size_t trivial_count_phi<Rational>(const Graph&, std::optional<std::size_t>, MinorLimits);

}  // namespace distideal
