// Copyright 2026 The Snarkforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// graph6 encoding (McKay's format) and DOT export.

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "snarkforge/graph.hpp"

namespace snarkforge {

namespace detail {

inline void append_graph6_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
}

}  // namespace detail

// Edges are written in upper-triangle column order (x(0,1), x(0,2), x(1,2),
// x(0,3), ...), six bits per byte, big-endian within the byte, padded with
// zeros. Edge order of `g` is not represented.
inline std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.num_vertices());
  std::string out;
  detail::append_graph6_size(out, n);
  const std::uint64_t bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  for (const EdgeRef& e : g.edges()) {
    const std::uint64_t i = static_cast<std::uint64_t>(e.u);
    const std::uint64_t j = static_cast<std::uint64_t>(e.v);
    const std::uint64_t k = j * (j - 1) / 2 + i;
    packed[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
  }
  for (std::uint8_t byte : packed) out.push_back(static_cast<char>(byte + 63));
  return out;
}

// Accepts an optional ">>graph6<<" header and a trailing newline. Edges come
// out in the same upper-triangle column order the encoder uses.
inline Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw ParseError("graph6 string truncated", at);
    const unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", at);
    return c - 63;
  };
  std::uint64_t n = 0;
  const std::size_t size_at = pos;
  if (sextet(pos) < 63) {
    n = sextet(pos);
    pos += 1;
  } else if (sextet(pos + 1) < 63) {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(pos + i);
    pos += 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | sextet(pos + i);
    pos += 8;
  }
  if (n == 0) throw ParseError("graph6 graph has no vertices", size_at);
  if (n > (1u << 20)) throw ParseError("graph6 vertex count too large", size_at);
  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                         " bytes, expected " + std::to_string(bytes),
                     text.size() < pos + bytes ? text.size() : pos + bytes);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const std::uint64_t byte = sextet(pos + k / 6);
      if (byte & (1u << (5 - k % 6))) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  for (std::uint64_t pad = bits; pad < bytes * 6; ++pad) {
    if (sextet(pos + pad / 6) & (1u << (5 - pad % 6))) {
      throw ParseError("nonzero graph6 padding bits", pos + pad / 6);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

// DOT text; `edge_colors`, when non-empty, holds one color label per edge.
inline std::string to_dot(const Graph& g, const std::vector<std::string>& edge_colors = {},
                          std::string_view name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v << " [label=\"" << v << "\"];\n";
  }
  for (const EdgeRef& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (!edge_colors.empty()) out << " [color=\"" << edge_colors.at(e.index) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace snarkforge
