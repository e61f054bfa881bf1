#pragma once

#include <string>
#include <vector>

#include "distideal/ideals.hpp"

namespace distideal {

// Closed-form generator sets. Subsets are enumerated lexicographically and
// empty products are 1.

/// Generators of I_i(K_n) in x0..x{n-1}.
std::vector<IntPolynomial> complete_ideal_gens(std::size_t n, std::size_t i);

/// diag(x0..x{n-1}) - m*I + m*J.
SymbolicMatrix mdiag_matrix(std::size_t n, const Integer& m);
IntPolynomial mdiag_det(std::size_t n, const Integer& m);
/// A_k followed by B_k, zeros dropped; 1 <= k <= n - 1.
std::vector<IntPolynomial> mdiag_ideal_gens(std::size_t n, const Integer& m, std::size_t k);

/// Ring x1..xm, y used by the star closed forms.
PolyRingPtr star_ring(std::size_t m);
/// Leaf block diag(x) - 2I + 2J bordered by ones, with y in the corner.
SymbolicMatrix star_matrix(std::size_t m);
IntPolynomial star_det(std::size_t m);
/// det of star_matrix(m) without row m+1 and column i (1-based).
IntPolynomial star_minor_det(std::size_t m, std::size_t i);
/// C_k followed by D_k; 1 <= k <= m.
std::vector<IntPolynomial> star_ideal_gens(std::size_t m, std::size_t k);
/// Moves a star-ring polynomial to the generalized distance ring of star(m):
/// leaf x_j becomes x{j-1}, the centre y becomes x{m}.
IntPolynomial star_to_graph_ring(const IntPolynomial& f);

enum class FamilyKind { complete, mdiag, star };

struct FamilySpec {
  FamilyKind kind;
  /// Matrix size for complete and mdiag.
  std::size_t n = 0;
  /// Multiplier for mdiag, leaf count for star.
  std::size_t m = 0;
};

/// Parses "complete:N", "mdiag:N:M" or "star:M".
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

struct FamilyCheck {
  std::size_t k;
  std::size_t closed_form_generators;
  std::size_t minor_generators;
  bool equal;
};

struct FamilyReport {
  FamilySpec spec;
  std::vector<FamilyCheck> checks;
  bool ok() const;
};

/// Compares closed-form and brute-force ideals over Z for every index the
/// closed form covers, plus the full determinant. Bounds without
/// `allow_large`: complete n <= 5, mdiag n <= 5 and m <= 4, star m <= 4;
/// beyond them LimitExceeded is thrown.
FamilyReport verify_family(const FamilySpec& spec, bool allow_large = false);

}  // namespace distideal
