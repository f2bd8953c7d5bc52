#pragma once

// graph6 interchange format (header-less).
//
//   N(n): n <= 62        -> one byte n+63
//         n <= 258047    -> 126, then 3 bytes of 6 bits each (+63)
//   R(x): upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... (column-major)
//         packed big-endian into 6-bit groups, zero padded, each +63.

#include <cstddef>
#include <string>
#include <string_view>

#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"

namespace fanfree {

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view s) {
  // Trailing newline/CR are tolerated; anything else must be a graph6 byte.
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);

  std::size_t pos = 0;
  auto byte = [&](std::size_t at) -> int {
    if (at >= s.size()) throw parse_error("graph6: unexpected end of input", at);
    const int c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126)
      throw parse_error("graph6: byte " + std::to_string(c) + " outside [63,126]", at);
    return c - 63;
  };

  if (s.empty()) throw parse_error("graph6: empty input", 0);
  long n = 0;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else {
    if (s.size() > 1 && static_cast<unsigned char>(s[1]) == 126)
      throw parse_error("graph6: 8-byte length prefix unsupported", 1);
    n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw capacity_error("graph6: order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxVertices));

  const long pairs = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (s.size() != expected)
    throw parse_error("graph6: expected " + std::to_string(expected) + " bytes for n=" +
                          std::to_string(n) + ", got " + std::to_string(s.size()),
                      std::min(s.size(), expected));

  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int chunk = byte(pos + static_cast<std::size_t>(k / 6));
    if (chunk & ((1 << (6 - k % 6)) - 1))
      throw parse_error("graph6: nonzero padding bits", pos + static_cast<std::size_t>(k / 6));
  }
  return std::move(b).build();
}

}  // namespace fanfree
