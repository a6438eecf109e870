#include "zir/graph6.hpp"

#include <vector>

#include "zir/errors.hpp"

namespace zir {

namespace {

constexpr int kGraph6MaxOrder = 62;

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw ParseError("graph6: " + what + " at byte " + std::to_string(offset));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) fail(0, "empty input");
  const unsigned char head = static_cast<unsigned char>(text[0]);
  if (head == 126) fail(0, "orders above 62 are not supported");
  if (head < 64 || head > 125) fail(0, "invalid order byte");
  const int n = head - 63;
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body_len = (bit_count + 5) / 6;
  if (text.size() < 1 + body_len) fail(text.size(), "truncated edge data");
  if (text.size() > 1 + body_len) fail(1 + body_len, "trailing bytes");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t offset = 1 + bit / 6;
      const int value = static_cast<unsigned char>(text[offset]) - 63;
      if (value < 0 || value > 63) fail(offset, "invalid data byte");
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits in the final byte must be zero.
  if (body_len > 0) {
    const std::size_t last = body_len;
    const int value = static_cast<unsigned char>(text[last]) - 63;
    if (value < 0 || value > 63) fail(last, "invalid data byte");
    const std::size_t used = bit_count - (body_len - 1) * 6;
    if ((value & ((1 << (6 - used)) - 1)) != 0) fail(last, "nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw SizeLimitError("graph6 short form supports order <= 62, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace zir
