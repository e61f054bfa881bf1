#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace distideal {

/// Row and column subsets of a minor, as bitmasks.
struct MinorKey {
  std::uint32_t rows;
  std::uint32_t cols;
  friend bool operator==(const MinorKey&, const MinorKey&) = default;
};

struct MinorKeyHash {
  std::size_t operator()(const MinorKey& k) const {
    return (static_cast<std::size_t>(k.rows) << 32) ^ k.cols;
  }
};

template <class T>
using MinorLevel = std::unordered_map<MinorKey, T, MinorKeyHash>;

/// Every k x k minor of a rows x cols matrix. Level l+1 is built from level
/// l by expanding along the highest chosen row, so each minor costs at most
/// k multiplications. `entry(r, c)` returns the matrix entry; `is_zero`
/// lets the expansion skip vanishing entries.
template <class T, class Entry, class IsZero>
MinorLevel<T> minor_table(std::size_t rows, std::size_t cols, std::size_t k, Entry entry,
                          IsZero is_zero, const T& one) {
  if (rows > 31 || cols > 31) throw std::out_of_range("minor_table: matrix too large");
  if (k > rows || k > cols) throw std::out_of_range("minor_table: minor size exceeds matrix");
  MinorLevel<T> level;
  level.emplace(MinorKey{0, 0}, one);
  auto subsets = [](std::size_t n, std::size_t size) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) == size) out.push_back(m);
    }
    return out;
  };
  for (std::size_t l = 0; l < k; ++l) {
    MinorLevel<T> next;
    const auto row_sets = subsets(rows, l + 1);
    const auto col_sets = subsets(cols, l + 1);
    for (auto row_set : row_sets) {
      const unsigned last = 31 - std::countl_zero(row_set);
      const std::uint32_t rest_rows = row_set & ~(1U << last);
      for (auto col_set : col_sets) {
        std::optional<T> sum;
        unsigned position = 0;
        for (std::uint32_t bits = col_set; bits != 0; bits &= bits - 1, ++position) {
          const unsigned c = std::countr_zero(bits);
          const auto& a = entry(last, c);
          if (is_zero(a)) continue;
          auto it = level.find(MinorKey{rest_rows, col_set & ~(1U << c)});
          if (it == level.end() || is_zero(it->second)) continue;
          T product = a * it->second;
          const bool negative = (l + position) % 2 == 1;
          if (!sum) {
            sum = std::move(product);
            if (negative) *sum = -*sum;
          } else if (negative) {
            *sum -= product;
          } else {
            *sum += product;
          }
        }
        if (sum && !is_zero(*sum)) next.emplace(MinorKey{row_set, col_set}, std::move(*sum));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace distideal
