#pragma once

// Reference generator sets used as golden data. Claw data is written with
// the centre as x0 and relabelled onto star(3), whose centre is vertex 3.

#include <string>
#include <vector>

#include "distideal/ideals.hpp"

namespace fixture {

using distideal::IntPolynomial;

inline std::vector<IntPolynomial> parse_all(const distideal::PolyRingPtr& ring,
                                            const std::vector<std::string>& texts) {
  std::vector<IntPolynomial> out;
  for (const auto& t : texts) out.push_back(distideal::parse_polynomial<distideal::Integer>(ring, t));
  return out;
}

/// Claw ideals I_1..I_4 in star(3) labelling.
inline std::vector<IntPolynomial> claw_ideal(std::size_t i) {
  static const std::vector<std::vector<std::string>> reference{
      {"1"},
      {"2*x0 - 1", "x1 - 2", "x2 - 2", "x3 - 2"},
      {"2*x0*x1 - 4*x0 - x1 + 2", "2*x0*x2 - 4*x0 - x2 + 2", "2*x0*x3 - 4*x0 - x3 + 2",
       "x1*x2 - 2*x1 - 2*x2 + 4", "x1*x3 - 2*x1 - 2*x3 + 4", "x2*x3 - 2*x2 - 2*x3 + 4"},
      {"x0*x1*x2*x3 - 4*x0*x1 - 4*x0*x2 - 4*x0*x3 + 16*x0 - x1*x2 - x1*x3 + 4*x1 - x2*x3 + 4*x2 + "
       "4*x3 - 12"},
  };
  const auto ring = distideal::indexed_ring(4);
  // centre x0 -> x3, leaf x_j -> x_{j-1}
  const std::vector<std::size_t> relabel{3, 0, 1, 2};
  std::vector<IntPolynomial> out;
  for (const auto& f : parse_all(ring, reference.at(i - 1))) out.push_back(distideal::rename(f, ring, relabel));
  return out;
}

/// C4 bases for sizes 0..4 as printed by the reference session.
inline std::vector<IntPolynomial> c4_basis(std::size_t i) {
  static const std::vector<std::vector<std::string>> printed{
      {"1"},
      {"1"},
      {"x0 + 1", "x1 + 1", "x2 + 1", "x3 + 1", "3"},
      {"x0*x1 - 2*x0 - 2*x1 + 4", "2*x0*x2 - x0 - x2 - 4", "x0*x3 - 2*x0 - 2*x3 + 4",
       "x1*x2 - 2*x1 - 2*x2 + 4", "2*x1*x3 - x1 - x3 - 4", "x2*x3 - 2*x2 - 2*x3 + 4"},
      {"x0*x1*x2*x3 - x0*x1 - 4*x0*x2 - x0*x3 + 4*x0 - x1*x2 - 4*x1*x3 + 4*x1 - x2*x3 + 4*x2 + 4*x3"},
  };
  return parse_all(distideal::indexed_ring(4), printed.at(i));
}

}  // namespace fixture
