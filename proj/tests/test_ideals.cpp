#include <doctest.h>

#include <algorithm>

#include "distideal/ideals.hpp"
#include "distideal/snf.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace distideal;

namespace {

IntIdeal ideal_of(std::vector<IntPolynomial> gens) {
  const auto ring = gens.front().ring();
  return IntIdeal(ring, std::move(gens));
}

bool has_constant_one(const std::vector<IntPolynomial>& list) {
  return std::ranges::any_of(list, [](const IntPolynomial& f) { return f.to_string() == "1"; });
}

Graph p4_with_dominating_vertex() {
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

}  // namespace

TEST_SUITE("ideals") {
  TEST_CASE("generalized distance matrix") {
    const auto k2 = generalized_distance_matrix(complete_graph(2));
    CHECK(k2(0, 0).to_string() == "x0");
    CHECK(k2(0, 1).to_string() == "1");
    CHECK(k2(1, 1).to_string() == "x1");
    CHECK(generalized_distance_matrix(cycle(4)).render() ==
          "[x0  1  2  1]\n[ 1 x1  1  2]\n[ 2  1 x2  1]\n[ 1  2  1 x3]\n");
    // Claw in star labelling: leaves 0..2, centre 3.
    const auto claw = generalized_distance_matrix(star(3));
    CHECK(claw.render() == "[x0  2  2  1]\n[ 2 x1  2  1]\n[ 2  2 x2  1]\n[ 1  1  1 x3]\n");
    CHECK_THROWS_AS(generalized_distance_matrix(Graph(3, {{0, 1}})), std::domain_error);
  }

  TEST_CASE("determinant examples") {
    CHECK(det_bareiss(generalized_distance_matrix(complete_graph(2))).to_string() == "x0*x1 - 1");
    CHECK(det_bareiss(generalized_distance_matrix(complete_graph(3))).to_string() ==
          "x0*x1*x2 - x0 - x1 - x2 + 2");
    CHECK(determinant(distance_matrix(cycle(4))) == 0);
    const std::vector<Integer> zero(4, 0);
    CHECK(evaluate(det_laplace(generalized_distance_matrix(cycle(4))), std::span<const Integer>(zero)) == 0);
  }

  TEST_CASE("determinant engines agree with the Leibniz oracle") {
    for (const auto& g : enumerate_connected(5)) {
      const auto m = generalized_distance_matrix(g);
      const auto bareiss = det_bareiss(m);
      CHECK(bareiss == det_laplace(m));
      CHECK(bareiss == oracle::det(m));
    }
    for (const auto& g : enumerate_connected(6)) {
      if (g.order() != 6) continue;
      const auto m = generalized_distance_matrix(g);
      CHECK(det_bareiss(m) == det_laplace(m));
    }
  }

  TEST_CASE("minors examples") {
    const auto k2 = generalized_distance_matrix(complete_graph(2));
    const auto top = minors(k2, 2);
    REQUIRE(top.size() == 1);
    CHECK(top[0].to_string() == "x0*x1 - 1");
    CHECK(minors(k2, 0).size() == 1);
    CHECK(has_constant_one(minors(generalized_distance_matrix(star(3)), 1)));
    CHECK_THROWS_AS(minors(k2, 3), std::out_of_range);

    const auto m = generalized_distance_matrix(p4_with_dominating_vertex());
    const std::vector<std::size_t> rows{1, 3};
    const std::vector<std::size_t> cols{0, 2};
    CHECK(det_bareiss(m.submatrix(rows, cols)).to_string() == "-1");
    CHECK(has_constant_one(minors(m, 2)));
  }

  TEST_CASE("minors generate the same ideal as every explicit submatrix") {
    for (const auto& g : enumerate_connected(4)) {
      const auto m = generalized_distance_matrix(g);
      const auto n = g.order();
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<IntPolynomial> brute;
        for (const auto& rows : oracle::subsets(n, i)) {
          for (const auto& cols : oracle::subsets(n, i)) {
            const auto d = oracle::det(m.submatrix(rows, cols));
            if (!d.is_zero()) brute.push_back(d);
          }
        }
        const auto listed = minors(m, i);
        CHECK(ideals_equal(ideal_of(brute), ideal_of(listed)));
        CHECK(listed.size() <= brute.size());
      }
    }
  }

  TEST_CASE("minor limits") {
    const auto m = generalized_distance_matrix(path(9));
    CHECK_THROWS_AS(minors(m, 2), LimitExceeded);
    CHECK(within_default_limits(8, 4));
    CHECK(within_default_limits(8, 7));
    CHECK_FALSE(within_default_limits(8, 5));
    CHECK_FALSE(within_default_limits(9, 1));
    CHECK_NOTHROW(minors(generalized_distance_matrix(path(6)), 5));
  }

  TEST_CASE("claw ideals") {
    for (std::size_t i = 1; i <= 4; ++i) {
      const auto r = distance_ideal<Integer>(star(3), i);
      CHECK(ideals_equal(r.ideal, ideal_of(fixture::claw_ideal(i))));
      CHECK(r.trivial == (i == 1));
      CHECK(verify_basis(r.ideal.basis(), r.ideal.generators()).ok());
    }
  }

  TEST_CASE("cycle of length four") {
    for (std::size_t i = 1; i <= 4; ++i) {
      const auto r = distance_ideal<Integer>(cycle(4), i);
      CHECK(ideals_equal(r.ideal, ideal_of(fixture::c4_basis(i))));
    }
    CHECK(distance_ideal<Integer>(cycle(4), 2).ideal.basis().elements.size() == 5);
    CHECK(distance_ideal<Rational>(cycle(4), 2).trivial);
    CHECK_FALSE(distance_ideal<Rational>(cycle(4), 3).trivial);
  }

  TEST_CASE("complete graph on three vertices over Q") {
    const auto r = distance_ideal<Rational>(complete_graph(3), 2);
    const auto ring = indexed_ring(3);
    std::vector<RatPolynomial> expected;
    for (const char* t : {"x0 - 1", "x1 - 1", "x2 - 1"}) expected.push_back(parse_polynomial<Rational>(ring, t));
    CHECK(ideals_equal(r.ideal, RatIdeal(ring, expected)));
    CHECK_THROWS_AS(distance_ideal<Integer>(complete_graph(3), 4), std::out_of_range);
  }

  TEST_CASE("Phi examples") {
    CHECK(trivial_count_phi<Integer>(path(4)) == 2);
    CHECK(trivial_count_phi<Integer>(pattern_graph(Pattern::paw)) == 2);
    CHECK(trivial_count_phi<Integer>(pattern_graph(Pattern::diamond)) == 2);
    for (std::size_t a = 1; a <= 3; ++a) {
      for (std::size_t b = 1; b <= 3; ++b) CHECK(trivial_count_phi<Integer>(complete_bipartite(a, b)) == 1);
    }
    CHECK(trivial_count_phi<Rational>(cycle(4)) == 2);
    CHECK(trivial_count_phi<Integer>(cycle(4)) == 1);
    CHECK(trivial_count_phi<Integer>(complete_graph(1)) == 0);
    CHECK(distance_ideal<Integer>(complete_graph(1), 1).ideal.basis().elements.front().to_string() == "x0");
    CHECK(trivial_count_phi<Integer>(path(5), 1) == 1);
  }

  TEST_CASE("evaluate_ideal examples") {
    const std::vector<Integer> zero3(3, 0);
    CHECK(evaluate_ideal(complete_graph(3), 3, zero3) == 2);
    const std::vector<Integer> zero4(4, 0);
    CHECK(evaluate_ideal(star(3), 2, zero4) == 1);
    CHECK(evaluate_ideal(cycle(4), 4, zero4) == 0);
    CHECK_THROWS_AS(evaluate_ideal(cycle(4), 2, zero3), std::invalid_argument);
  }

  TEST_CASE("evaluate_ideal agrees with the minor oracle") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (const auto& g : enumerate_connected(4)) {
      std::vector<Integer> d(g.order());
      for (auto& v : d) v = entry(rng);
      const auto a = distance_matrix_at(g, d);
      for (std::size_t i = 1; i <= g.order(); ++i) CHECK(evaluate_ideal(g, i, d) == oracle::gcd_of_minors(a, i));
    }
  }

  TEST_CASE("K3 at x = 1 kills every size-two generator") {
    const auto r = distance_ideal<Integer>(complete_graph(3), 2);
    const std::vector<Integer> ones(3, 1);
    for (const auto& f : r.ideal.generators()) CHECK(evaluate(f, std::span<const Integer>(ones)) == 0);
    for (const auto& f : r.ideal.basis().elements) CHECK(evaluate(f, std::span<const Integer>(ones)) == 0);
  }

  TEST_CASE("characteristic polynomial") {
    const auto k3 = char_poly_distance(complete_graph(3));
    CHECK(k3.polynomial.to_string() == "lambda^3 - 3*lambda - 2");
    CHECK(k3.integer_roots == std::vector<IntegerRoot>{{Integer(-1), 2}, {Integer(2), 1}});
    CHECK(char_poly_distance(complete_graph(2)).polynomial.to_string() == "lambda^2 - 1");
    const auto c4 = char_poly_distance(cycle(4));
    CHECK(c4.polynomial.to_string() == "lambda^4 - 12*lambda^2 - 16*lambda");
    CHECK(c4.integer_roots == std::vector<IntegerRoot>{{Integer(-2), 2}, {Integer(0), 1}, {Integer(4), 1}});
    CHECK(char_poly_distance(complete_graph(1)).polynomial.to_string() == "lambda");
  }

  TEST_CASE("characteristic polynomial matches the Leibniz determinant") {
    for (const auto& g : enumerate_connected(5)) {
      const auto cp = char_poly_distance(g);
      const auto n = g.order();
      // det(lambda I - D) at small integer lambda
      for (int lam = -3; lam <= 3; ++lam) {
        IntegerMatrix a(n, n);
        const auto d = distance_matrix(g);
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) a(r, c) = (r == c ? Integer(lam) : Integer(0)) - d(r, c);
        }
        const std::vector<Integer> at{Integer(lam)};
        CHECK(evaluate(cp.polynomial, std::span<const Integer>(at)) == oracle::det(a));
      }
      unsigned total = 0;
      for (const auto& root : cp.integer_roots) {
        total += root.multiplicity;
        const std::vector<Integer> at{root.value};
        CHECK(evaluate(cp.polynomial, std::span<const Integer>(at)) == 0);
      }
      CHECK(total <= n);
    }
  }

  TEST_CASE("ideal chain on the corpus") {
    property::BasisAudit audit;
    const auto t = property::chain(enumerate_connected(5), &audit);
    CHECK(t.failures.empty());
    CHECK(t.checked > 0);
    CHECK(audit.tally.failures.empty());
  }

  TEST_CASE("diameter-two induced subgraphs give contained ideals") {
    const auto t = property::induced_containment(enumerate_connected(5), property::DiameterTwo{}, nullptr);
    CHECK(t.failures.empty());
    CHECK(t.checked > 100);
  }

  TEST_CASE("distance-hereditary graphs give contained ideals") {
    const auto t =
        property::induced_containment(enumerate_connected(5), property::DistanceHereditary{}, nullptr);
    CHECK(t.failures.empty());
    CHECK(t.checked > 0);
  }

  TEST_CASE("P4 propagation") {
    const Pattern p4[] = {Pattern::p4};
    const auto t = property::propagation(enumerate_connected(6), p4, nullptr);
    CHECK(t.failures.empty());
    CHECK(t.checked > 0);
  }

  TEST_CASE("Phi bounded by phi, no graph with phi one") {
    const auto t = property::phi_bounds(enumerate_connected(6));
    CHECK(t.failures.empty());
  }

  TEST_CASE("evaluation coherence on a sample") {
    const auto t = property::evaluation_coherence(enumerate_connected(5), 5, 3);
    CHECK(t.failures.empty());
    CHECK(t.checked > 0);
  }
}
