#include "distideal/families.hpp"

#include <charconv>
#include <stdexcept>

namespace distideal {

namespace {

// prod over `subset` of (x_j - shift), with x_j = variable offset + j.
IntPolynomial shifted_product(const PolyRingPtr& ring, std::span<const Vertex> subset,
                              const Integer& shift) {
  auto out = IntPolynomial::constant(ring, 1);
  for (auto j : subset) {
    out *= IntPolynomial::variable(ring, j) - IntPolynomial::constant(ring, shift);
  }
  return out;
}

// prod_{j in set}(x_j - shift) + weight * sum_{i in set} prod_{j in set, j != i}(x_j - shift)
IntPolynomial product_plus_cofactors(const PolyRingPtr& ring, std::span<const Vertex> set,
                                     const Integer& shift, const IntPolynomial& weight) {
  auto out = shifted_product(ring, set, shift);
  std::vector<Vertex> rest;
  for (std::size_t skip = 0; skip < set.size(); ++skip) {
    rest.clear();
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (j != skip) rest.push_back(set[j]);
    }
    out += weight * shifted_product(ring, rest, shift);
  }
  return out;
}

std::vector<Vertex> iota(std::size_t n) {
  std::vector<Vertex> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = j;
  return out;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::out_of_range(message);
}

}  // namespace

std::vector<IntPolynomial> complete_ideal_gens(std::size_t n, std::size_t i) {
  require(n >= 1 && i >= 1 && i <= n, "complete_ideal_gens: need 1 <= i <= n");
  auto ring = indexed_ring(n);
  if (i == n) {
    const auto all = iota(n);
    return {product_plus_cofactors(ring, all, 1, IntPolynomial::constant(ring, 1))};
  }
  std::vector<IntPolynomial> out;
  for_each_subset(n, i - 1, [&](std::span<const Vertex> subset) {
    out.push_back(shifted_product(ring, subset, 1));
  });
  return out;
}

SymbolicMatrix mdiag_matrix(std::size_t n, const Integer& m) {
  require(n >= 1, "mdiag_matrix: need n >= 1");
  SymbolicMatrix out(indexed_ring(n), n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = r == c ? IntPolynomial::variable(out.ring(), r)
                         : IntPolynomial::constant(out.ring(), m);
    }
  }
  return out;
}

IntPolynomial mdiag_det(std::size_t n, const Integer& m) {
  require(n >= 1, "mdiag_det: need n >= 1");
  auto ring = indexed_ring(n);
  const auto all = iota(n);
  return product_plus_cofactors(ring, all, m, IntPolynomial::constant(ring, m));
}

std::vector<IntPolynomial> mdiag_ideal_gens(std::size_t n, const Integer& m, std::size_t k) {
  require(n >= 2 && k >= 1 && k + 1 <= n, "mdiag_ideal_gens: need 1 <= k <= n - 1");
  auto ring = indexed_ring(n);
  std::vector<IntPolynomial> out;
  for_each_subset(n, k - 1, [&](std::span<const Vertex> subset) {
    auto a = shifted_product(ring, subset, m).times(m);
    if (!a.is_zero()) out.push_back(std::move(a));
  });
  for_each_subset(n, k, [&](std::span<const Vertex> subset) {
    auto b = product_plus_cofactors(ring, subset, m, IntPolynomial::constant(ring, -m));
    if (!b.is_zero()) out.push_back(std::move(b));
  });
  return out;
}

PolyRingPtr star_ring(std::size_t m) {
  require(m >= 1, "star_ring: need m >= 1");
  auto names = VarRegistry::indexed("x", m, 1).names();
  names.push_back("y");
  return make_ring(std::move(names));
}

SymbolicMatrix star_matrix(std::size_t m) {
  auto ring = star_ring(m);
  SymbolicMatrix out(ring, m + 1);
  for (std::size_t r = 0; r <= m; ++r) {
    for (std::size_t c = 0; c <= m; ++c) {
      if (r == c) {
        out(r, c) = IntPolynomial::variable(ring, r);
      } else {
        out(r, c) = IntPolynomial::constant(ring, r == m || c == m ? 1 : 2);
      }
    }
  }
  return out;
}

IntPolynomial star_det(std::size_t m) {
  auto ring = star_ring(m);
  const auto y = IntPolynomial::variable(ring, m);
  const auto leaves = iota(m);
  const auto two_y_minus_one = y.times(2) - IntPolynomial::constant(ring, 1);
  auto out = y * shifted_product(ring, leaves, 2);
  std::vector<Vertex> rest;
  for (std::size_t skip = 0; skip < m; ++skip) {
    rest.clear();
    for (std::size_t j = 0; j < m; ++j) {
      if (j != skip) rest.push_back(j);
    }
    out += two_y_minus_one * shifted_product(ring, rest, 2);
  }
  return out;
}

IntPolynomial star_minor_det(std::size_t m, std::size_t i) {
  require(i >= 1 && i <= m, "star_minor_det: need 1 <= i <= m");
  auto ring = star_ring(m);
  std::vector<Vertex> rest;
  for (std::size_t j = 0; j < m; ++j) {
    if (j + 1 != i) rest.push_back(j);
  }
  auto out = shifted_product(ring, rest, 2);
  return (m - i) % 2 == 0 ? out : -out;
}

std::vector<IntPolynomial> star_ideal_gens(std::size_t m, std::size_t k) {
  require(m >= 1 && k >= 1 && k <= m, "star_ideal_gens: need 1 <= k <= m");
  auto ring = star_ring(m);
  std::vector<IntPolynomial> out;
  for_each_subset(m, k - 1, [&](std::span<const Vertex> subset) {
    out.push_back(shifted_product(ring, subset, 2));
  });
  if (k >= 2) {
    const auto y = IntPolynomial::variable(ring, m);
    const auto two_y_minus_one = y.times(2) - IntPolynomial::constant(ring, 1);
    for_each_subset(m, k - 2, [&](std::span<const Vertex> subset) {
      out.push_back(two_y_minus_one * shifted_product(ring, subset, 2));
    });
  }
  return out;
}

IntPolynomial star_to_graph_ring(const IntPolynomial& f) {
  const std::size_t arity = f.ring()->arity();
  // Both rings list the leaves first and the centre last.
  return rename(f, indexed_ring(arity), std::span<const std::size_t>(iota(arity)));
}

FamilySpec parse_family_spec(std::string_view text) {
  std::vector<std::size_t> values;
  const auto colon = text.find(':');
  const auto kind = text.substr(0, colon);
  auto rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto next = rest.find(':');
    const auto piece = rest.substr(0, next);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("family spec: bad number '" + std::string(piece) + "'");
    }
    values.push_back(value);
    rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next + 1);
  }
  auto expect = [&](std::size_t count) {
    if (values.size() != count) {
      throw std::invalid_argument("family spec '" + std::string(text) + "': expected " +
                                  std::to_string(count) + " parameter(s)");
    }
  };
  FamilySpec spec{};
  if (kind == "complete") {
    expect(1);
    spec = {FamilyKind::complete, values[0], 0};
    if (spec.n < 1) throw std::invalid_argument("family spec: n must be positive");
  } else if (kind == "mdiag") {
    expect(2);
    spec = {FamilyKind::mdiag, values[0], values[1]};
    if (spec.n < 2) throw std::invalid_argument("family spec: mdiag needs n >= 2");
  } else if (kind == "star") {
    expect(1);
    spec = {FamilyKind::star, 0, values[0]};
    if (spec.m < 1) throw std::invalid_argument("family spec: m must be positive");
  } else {
    throw std::invalid_argument("family spec: unknown kind '" + std::string(kind) + "'");
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::complete:
      return "complete:" + std::to_string(spec.n);
    case FamilyKind::mdiag:
      return "mdiag:" + std::to_string(spec.n) + ":" + std::to_string(spec.m);
    case FamilyKind::star:
      return "star:" + std::to_string(spec.m);
  }
  return {};
}

bool FamilyReport::ok() const {
  return std::ranges::all_of(checks, [](const FamilyCheck& c) { return c.equal; });
}

namespace {

FamilyCheck compare(std::size_t k, std::vector<IntPolynomial> closed, std::vector<IntPolynomial> brute,
                    const PolyRingPtr& ring) {
  FamilyCheck check{k, closed.size(), brute.size(), false};
  IntIdeal a(ring, std::move(closed));
  IntIdeal b(ring, std::move(brute));
  check.equal = ideals_equal(a, b);
  return check;
}

}  // namespace

FamilyReport verify_family(const FamilySpec& spec, bool allow_large) {
  const MinorLimits limits{true};
  FamilyReport report{spec, {}};
  auto bound = [&](bool within) {
    if (!within && !allow_large) {
      throw LimitExceeded("family " + to_string(spec) + " exceeds the default verification bounds");
    }
  };
  switch (spec.kind) {
    case FamilyKind::complete: {
      bound(spec.n >= 1 && spec.n <= 5);
      const auto m = generalized_distance_matrix(complete_graph(spec.n));
      for (std::size_t i = 1; i <= spec.n; ++i) {
        report.checks.push_back(compare(i, complete_ideal_gens(spec.n, i), minors(m, i, limits), m.ring()));
      }
      break;
    }
    case FamilyKind::mdiag: {
      bound(spec.n >= 2 && spec.n <= 5 && spec.m <= 4);
      const Integer mult(static_cast<unsigned long>(spec.m));
      const auto m = mdiag_matrix(spec.n, mult);
      for (std::size_t k = 1; k < spec.n; ++k) {
        report.checks.push_back(
            compare(k, mdiag_ideal_gens(spec.n, mult, k), minors(m, k, limits), m.ring()));
      }
      report.checks.push_back(compare(spec.n, {mdiag_det(spec.n, mult)},
                                      {det_bareiss(m)}, m.ring()));
      break;
    }
    case FamilyKind::star: {
      bound(spec.m >= 1 && spec.m <= 4);
      const auto m = generalized_distance_matrix(star(spec.m));
      for (std::size_t k = 1; k <= spec.m; ++k) {
        std::vector<IntPolynomial> closed;
        for (const auto& g : star_ideal_gens(spec.m, k)) closed.push_back(star_to_graph_ring(g));
        report.checks.push_back(compare(k, std::move(closed), minors(m, k, limits), m.ring()));
      }
      report.checks.push_back(compare(spec.m + 1, {star_to_graph_ring(star_det(spec.m))},
                                      {det_bareiss(m)}, m.ring()));
      break;
    }
  }
  return report;
}

}  // namespace distideal
