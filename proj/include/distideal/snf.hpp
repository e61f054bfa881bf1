#pragma once

#include <optional>
#include <vector>

#include "distideal/graph.hpp"
#include "distideal/polynomial.hpp"

namespace distideal {

/// Dense row-major matrix of big integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free Bareiss elimination.
Integer determinant(const IntegerMatrix& a);

/// gcd of all k x k minors (nonnegative; 1 for k = 0).
Integer minor_gcd(const IntegerMatrix& a, std::size_t k);

struct SNFResult {
  /// min(rows, cols) entries: positive factors with f_i | f_{i+1}, then zeros.
  std::vector<Integer> invariant_factors;
  /// delta[i] = f_1 * ... * f_i for i = 0..rank.
  std::vector<Integer> delta;
  std::size_t rank = 0;
  /// Present when requested: U * A * V is the diagonal of invariant factors.
  std::optional<IntegerMatrix> u;
  std::optional<IntegerMatrix> v;

  std::size_t unit_count() const;
};

SNFResult smith_normal_form(const IntegerMatrix& a, bool with_transforms = false);

IntegerMatrix distance_matrix(const Graph& g);
/// diag(tr) - D(G); every row sums to zero.
IntegerMatrix distance_laplacian(const Graph& g);
/// D(G) with `diagonal` added.
IntegerMatrix distance_matrix_at(const Graph& g, std::span<const Integer> diagonal);

SNFResult distance_snf(const Graph& g);
SNFResult distance_laplacian_snf(const Graph& g);
/// Number of invariant factors of D(G) equal to 1.
std::size_t phi_unit_count(const Graph& g);

}  // namespace distideal
