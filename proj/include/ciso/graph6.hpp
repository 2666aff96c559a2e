#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ciso/graph.hpp"

namespace ciso {

/// Largest order representable with the single-byte graph6 size header.
inline constexpr int kMaxGraph6Order = 62;

class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(std::size_t position, const std::string& what)
      : std::invalid_argument("graph6 byte " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Bits x(0,1), x(0,2), x(1,2), x(0,3), ... (column-major upper triangle),
// packed big-endian six to a byte, each byte offset by 63.

inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error(0, "empty string");
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  for (std::size_t i = 0; i < text.size(); ++i)
    if (byte(i) < 63 || byte(i) > 126) throw Graph6Error(i, "byte " + std::to_string(byte(i)) + " outside 63..126");
  if (byte(0) == 126) throw Graph6Error(0, "multi-byte order header; only n <= 62 is supported");
  const int n = byte(0) - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (text.size() != payload + 1)
    throw Graph6Error(std::min(text.size(), payload + 1), "n=" + std::to_string(n) + " needs " +
                                                             std::to_string(payload + 1) + " bytes in total, got " +
                                                             std::to_string(text.size()));
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned chunk = byte(1 + k / 6) - 63;
      if ((chunk >> (5 - k % 6)) & 1U) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  if (k % 6 != 0) {
    const unsigned last = byte(text.size() - 1) - 63;
    if (last & ((1U << (6 - k % 6)) - 1)) throw Graph6Error(text.size() - 1, "non-zero padding bits");
  }
  return Graph::from_adjacency(std::move(rows));
}

inline std::string encode_graph6(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxGraph6Order) throw std::invalid_argument("graph6 encoding supports n <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(63 + n));
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

}  // namespace ciso
