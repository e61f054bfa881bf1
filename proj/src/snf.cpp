#include "distideal/snf.hpp"

#include <algorithm>
#include <stdexcept>

#include "distideal/minor_table.hpp"

namespace distideal {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntegerMatrix: ragged rows");
    for (long value : row) data_.emplace_back(value);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntegerMatrix: shape mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Integer determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer minor_gcd(const IntegerMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  const Integer one = 1;
  auto table = minor_table<Integer>(
      a.rows(), a.cols(), k, [&](std::size_t r, std::size_t c) -> const Integer& { return a(r, c); },
      [](const Integer& x) { return x == 0; }, one);
  Integer g = 0;
  for (const auto& [key, value] : table) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::size_t SNFResult::unit_count() const {
  return static_cast<std::size_t>(
      std::ranges::count_if(invariant_factors, [](const Integer& f) { return f == 1; }));
}

namespace {

class Reducer {
 public:
  Reducer(const IntegerMatrix& a, bool track) : m_(a), track_(track) {
    if (track_) {
      u_ = IntegerMatrix::identity(a.rows());
      v_ = IntegerMatrix::identity(a.cols());
    }
  }

  SNFResult run() && {
    const std::size_t limit = std::min(m_.rows(), m_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!move_min_to_pivot(t)) break;
      for (;;) {
        clear_line(t);
        if (!move_line_min_to_pivot(t)) {
          // Row and column t are clear; enforce divisibility of the rest.
          const auto bad = find_indivisible(t);
          if (!bad) break;
          add_row(t, *bad, 1);
        }
      }
      if (m_(t, t) < 0) negate_row(t);
    }
    SNFResult out;
    out.rank = t;
    out.invariant_factors.assign(limit, Integer(0));
    out.delta.push_back(1);
    for (std::size_t i = 0; i < t; ++i) {
      out.invariant_factors[i] = m_(i, i);
      out.delta.push_back(out.delta.back() * m_(i, i));
    }
    if (track_) {
      out.u = std::move(u_);
      out.v = std::move(v_);
    }
    return out;
  }

 private:
  IntegerMatrix m_;
  bool track_;
  IntegerMatrix u_;
  IntegerMatrix v_;

  // Brings the smallest nonzero |entry| of the trailing submatrix to (t, t).
  bool move_min_to_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t; r < m_.rows(); ++r) {
      for (std::size_t c = t; c < m_.cols(); ++c) consider(best, r, c);
    }
    return place(t, best);
  }

  // Same, restricted to row t and column t; false when both are clear.
  bool move_line_min_to_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t + 1; r < m_.rows(); ++r) consider(best, r, t);
    for (std::size_t c = t + 1; c < m_.cols(); ++c) consider(best, t, c);
    if (!best) return false;
    consider(best, t, t);
    return place(t, best);
  }

  void consider(std::optional<std::pair<std::size_t, std::size_t>>& best, std::size_t r,
                std::size_t c) const {
    if (m_(r, c) == 0) return;
    if (!best || mpz_cmpabs(m_(r, c).get_mpz_t(), m_(best->first, best->second).get_mpz_t()) < 0) best = {r, c};
  }

  bool place(std::size_t t, const std::optional<std::pair<std::size_t, std::size_t>>& best) {
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void clear_line(std::size_t t) {
    const Integer pivot = m_(t, t);
    for (std::size_t r = t + 1; r < m_.rows(); ++r) {
      if (m_(r, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m_(r, t).get_mpz_t(), pivot.get_mpz_t());
      add_row(r, t, -q);
    }
    for (std::size_t c = t + 1; c < m_.cols(); ++c) {
      if (m_(t, c) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m_(t, c).get_mpz_t(), pivot.get_mpz_t());
      add_col(c, t, -q);
    }
  }

  std::optional<std::size_t> find_indivisible(std::size_t t) const {
    for (std::size_t r = t + 1; r < m_.rows(); ++r) {
      for (std::size_t c = t + 1; c < m_.cols(); ++c) {
        if (!mpz_divisible_p(m_(r, c).get_mpz_t(), m_(t, t).get_mpz_t())) return r;
      }
    }
    return std::nullopt;
  }

  // row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t c = 0; c < m_.cols(); ++c) m_(target, c) += factor * m_(source, c);
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(target, c) += factor * u_(source, c);
    }
  }

  void add_col(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t r = 0; r < m_.rows(); ++r) m_(r, target) += factor * m_(r, source);
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, target) += factor * v_(r, source);
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m_.cols(); ++c) std::swap(m_(a, c), m_(b, c));
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m_.rows(); ++r) std::swap(m_(r, a), m_(r, b));
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
    }
  }

  void negate_row(std::size_t t) {
    for (std::size_t c = 0; c < m_.cols(); ++c) m_(t, c) = -m_(t, c);
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(t, c) = -u_(t, c);
    }
  }
};

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& a, bool with_transforms) {
  return Reducer(a, with_transforms).run();
}

IntegerMatrix distance_matrix(const Graph& g) {
  const auto d = all_pairs_distances(g);
  IntegerMatrix out(g.order(), g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = 0; v < g.order(); ++v) out(u, v) = d(u, v);
  }
  return out;
}

IntegerMatrix distance_laplacian(const Graph& g) {
  auto out = distance_matrix(g);
  const auto tr = transmissions(g);
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = 0; v < g.order(); ++v) out(u, v) = -out(u, v);
    out(u, u) = tr[u];
  }
  return out;
}

IntegerMatrix distance_matrix_at(const Graph& g, std::span<const Integer> diagonal) {
  if (diagonal.size() != g.order()) {
    throw std::invalid_argument("distance_matrix_at: expected " + std::to_string(g.order()) +
                                " diagonal values");
  }
  auto out = distance_matrix(g);
  for (std::size_t u = 0; u < g.order(); ++u) out(u, u) = diagonal[u];
  return out;
}

SNFResult distance_snf(const Graph& g) { return smith_normal_form(distance_matrix(g)); }

SNFResult distance_laplacian_snf(const Graph& g) {
  return smith_normal_form(distance_laplacian(g));
}

std::size_t phi_unit_count(const Graph& g) { return distance_snf(g).unit_count(); }

}  // namespace distideal
