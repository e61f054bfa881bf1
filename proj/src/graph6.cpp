#include <stdexcept>
#include <string>

#include "distideal/graph.hpp"

namespace distideal {

namespace {
constexpr std::size_t kMaxGraph6Order = 62;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside [63, 126]");
  }
  const std::size_t n = static_cast<unsigned char>(text[0]) - 63;
  if (n == 0 || n > kMaxGraph6Order) {
    throw std::invalid_argument("graph6: unsupported order " + std::to_string(n));
  }
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw std::invalid_argument("graph6: expected " + std::to_string(1 + bytes) +
                                " bytes for order " + std::to_string(n) + ", got " +
                                std::to_string(text.size()));
  }
  auto bit = [&](std::size_t k) {
    const unsigned chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    return (chunk >> (5 - k % 6)) & 1U;
  };
  for (std::size_t k = bits; k < bytes * 6; ++k) {
    if (bit(k)) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (bit(k)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const auto n = g.order();
  if (n > kMaxGraph6Order) throw std::invalid_argument("graph6: order above 62");
  std::string out(1, static_cast<char>(n + 63));
  unsigned chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

}  // namespace distideal
