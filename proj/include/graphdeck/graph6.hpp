#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "graphdeck/errors.hpp"
#include "graphdeck/graph.hpp"

namespace graphdeck {

// graph6 text format: 6-bit printable encoding of the order followed by the
// upper triangle of the adjacency matrix in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... padded with zeros to a multiple of 6.
// Every emitted byte is in the range 63..126.

inline std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    // 63 <= n <= 258047: '~' followed by 18 bits in three sextets.
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int bits = 0, value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + value));
        bits = 0;
        value = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (value << (6 - bits))));
  return out;
}

inline Graph decode_graph6(std::string_view line) {
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.ends_with('\r')) line.remove_suffix(1);
  if (line.empty()) throw data_error("graph6: empty line", 0);

  std::size_t pos = 0;
  auto sextet = [&](std::size_t at) -> int {
    unsigned char c = static_cast<unsigned char>(line[at]);
    if (c < 63 || c > 126)
      throw data_error("graph6: illegal character 0x" + std::to_string(c), at);
    return c - 63;
  };

  long long n;
  if (static_cast<unsigned char>(line[0]) != 126) {
    n = sextet(0);
    pos = 1;
  } else if (line.size() >= 2 && static_cast<unsigned char>(line[1]) != 126) {
    if (line.size() < 4) throw data_error("graph6: truncated order prefix", line.size());
    n = (static_cast<long long>(sextet(1)) << 12) |
        (static_cast<long long>(sextet(2)) << 6) | sextet(3);
    pos = 4;
  } else {
    if (line.size() < 8) throw data_error("graph6: truncated order prefix", line.size());
    n = 0;
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | sextet(k);
    pos = 8;
  }
  if (n > kMaxVertices)
    throw cap_error("graph6: order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxVertices));

  const long long pair_bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (line.size() - pos != body)
    throw data_error("graph6: body has " + std::to_string(line.size() - pos) +
                         " bytes, expected " + std::to_string(body),
                     std::min(line.size(), pos + body));

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (std::size_t k = 0; k < body; ++k) {
    int v = sextet(pos + k);
    for (int b = 5; b >= 0; --b, ++bit) {
      if (bit >= pair_bits) {
        if ((v >> b) & 1)
          throw data_error("graph6: nonzero padding bit", pos + k);
        continue;
      }
      if ((v >> b) & 1) {
        // bit index -> column j, row i
        long long t = bit;
        int j = 1;
        while (t >= j) t -= j, ++j;
        g.add_edge(static_cast<int>(t), j);
      }
    }
  }
  return g;
}

}  // namespace graphdeck
