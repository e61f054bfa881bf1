#include <doctest.h>

#include <algorithm>

#include "distideal/snf.hpp"
#include "oracles.hpp"

using namespace distideal;

namespace {

std::vector<Integer> factors(const SNFResult& r) { return r.invariant_factors; }

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

void check_against_oracle(const IntegerMatrix& a) {
  const auto r = smith_normal_form(a, true);
  CHECK(r.invariant_factors == oracle::invariant_factors(a));
  for (std::size_t k = 0; k + 1 < r.invariant_factors.size(); ++k) {
    const auto& f = r.invariant_factors[k];
    const auto& g = r.invariant_factors[k + 1];
    CHECK((f == 0 ? g == 0 : g % f == 0));
  }
  REQUIRE(r.delta.size() == r.rank + 1);
  for (std::size_t i = 0; i <= r.rank; ++i) CHECK(r.delta[i] == oracle::gcd_of_minors(a, i));
  REQUIRE(r.u.has_value());
  REQUIRE(r.v.has_value());
  IntegerMatrix diagonal(a.rows(), a.cols());
  for (std::size_t k = 0; k < r.invariant_factors.size(); ++k) diagonal(k, k) = r.invariant_factors[k];
  CHECK(*r.u * a * *r.v == diagonal);
  CHECK(abs(determinant(*r.u)) == 1);
  CHECK(abs(determinant(*r.v)) == 1);
}

}  // namespace

TEST_SUITE("snf") {
  TEST_CASE("examples") {
    CHECK(factors(smith_normal_form(IntegerMatrix{{2, 4}, {4, 8}})) == ints({2, 0}));
    CHECK(factors(smith_normal_form(IntegerMatrix::identity(3))) == ints({1, 1, 1}));
    CHECK(factors(smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}})) == ints({1, 6}));
    CHECK(factors(smith_normal_form(IntegerMatrix{{0, 0}, {0, 0}})) == ints({0, 0}));
    CHECK(factors(smith_normal_form(IntegerMatrix{{-4}})) == ints({4}));
    CHECK(factors(smith_normal_form(IntegerMatrix{{6, 4, 2}})) == ints({2}));
    CHECK(smith_normal_form(IntegerMatrix(0, 0)).invariant_factors.empty());
  }

  TEST_CASE("determinant") {
    CHECK(determinant(IntegerMatrix{{2, 1}, {1, 2}}) == 3);
    CHECK(determinant(IntegerMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntegerMatrix(0, 0)) == 1);
    std::mt19937 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = oracle::random_matrix(rng, 5, 5, -6, 6);
      CHECK(determinant(a) == oracle::det(a));
    }
  }

  TEST_CASE("minor_gcd against explicit minors") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = oracle::random_matrix(rng, 4, 5, -7, 7);
      for (std::size_t k = 0; k <= 4; ++k) CHECK(minor_gcd(a, k) == oracle::gcd_of_minors(a, k));
    }
  }

  TEST_CASE("random matrices against the minor chain") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t rows = 1 + rng() % 5;
      const std::size_t cols = 1 + rng() % 5;
      check_against_oracle(oracle::random_matrix(rng, rows, cols, -9, 9));
    }
    // Low rank and sparse shapes.
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = oracle::random_matrix(rng, 4, 2, -3, 3);
      const auto b = oracle::random_matrix(rng, 2, 4, -3, 3);
      check_against_oracle(a * b);
      check_against_oracle(oracle::random_matrix(rng, 5, 5, 0, 1));
    }
  }

  TEST_CASE("distance matrices of the corpus") {
    for (const auto& g : enumerate_connected(6)) check_against_oracle(distance_matrix(g));
  }

  TEST_CASE("graph examples") {
    CHECK(factors(distance_snf(complete_graph(4))) == ints({1, 1, 1, 3}));
    CHECK(factors(distance_snf(star(3))) == ints({1, 1, 2, 6}));
    CHECK(factors(distance_laplacian_snf(complete_graph(4))) == ints({1, 4, 4, 0}));
    CHECK(factors(distance_laplacian_snf(star(2))) == ints({1, 5, 0}));
    for (std::size_t n = 3; n <= 6; ++n) CHECK(phi_unit_count(complete_graph(n)) == n - 1);
    CHECK(phi_unit_count(star(3)) == 2);
  }

  TEST_CASE("complete graph and star corollaries") {
    for (std::size_t n = 2; n <= 10; ++n) {
      auto expected = std::vector<Integer>(n - 1, Integer(1));
      expected.emplace_back(static_cast<long>(n - 1));
      CHECK(factors(distance_snf(complete_graph(n))) == expected);
    }
    for (std::size_t n = 3; n <= 10; ++n) {
      std::vector<Integer> expected{Integer(1)};
      for (std::size_t k = 0; k + 2 < n; ++k) expected.emplace_back(static_cast<long>(n));
      expected.emplace_back(0);
      CHECK(factors(distance_laplacian_snf(complete_graph(n))) == expected);
    }
    for (std::size_t m = 2; m <= 8; ++m) {
      std::vector<Integer> expected{Integer(1), Integer(1)};
      for (std::size_t k = 0; k + 2 < m; ++k) expected.emplace_back(2);
      expected.emplace_back(static_cast<long>(2 * m));
      CHECK(factors(distance_snf(star(m))) == expected);
    }
  }

  TEST_CASE("distance Laplacian rows sum to zero") {
    for (const auto& g : enumerate_connected(6)) {
      const auto l = distance_laplacian(g);
      for (std::size_t r = 0; r < l.rows(); ++r) {
        Integer sum = 0;
        for (std::size_t c = 0; c < l.cols(); ++c) sum += l(r, c);
        CHECK(sum == 0);
      }
      if (g.order() >= 2) CHECK(distance_laplacian_snf(g).invariant_factors.back() == 0);
    }
  }

  TEST_CASE("relabelling leaves the factors unchanged") {
    std::mt19937 rng(31);
    for (const auto& g : enumerate_connected(6)) {
      std::vector<Vertex> order(g.order());
      std::iota(order.begin(), order.end(), Vertex{0});
      std::shuffle(order.begin(), order.end(), rng);
      const auto h = g.induced(order);
      CHECK(distance_snf(h).invariant_factors == distance_snf(g).invariant_factors);
      CHECK(distance_laplacian_snf(h).invariant_factors == distance_laplacian_snf(g).invariant_factors);
    }
  }

  TEST_CASE("trees have two unit factors") {
    for (const auto& g : enumerate_connected(7)) {
      if (g.order() >= 2 && g.size() == g.order() - 1) CHECK(phi_unit_count(g) == 2);
    }
  }
}
