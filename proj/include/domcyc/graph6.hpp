#pragma once

// graph6 interchange: one graph per line; N(n) header followed by the upper
// triangle in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per
// byte, each byte offset by 63.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "domcyc/errors.hpp"
#include "domcyc/graph.hpp"

namespace domcyc {

namespace graph6_detail {

inline constexpr char kOffset = 63;
inline constexpr std::size_t kShortMax = 62;
inline constexpr std::size_t kMediumMax = 258047;
inline constexpr std::uint64_t kMaxReadOrder = std::uint64_t{1} << 20;

inline void append_order(std::string& out, std::size_t n) {
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= kMediumMax) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
  }
}

}  // namespace graph6_detail

/// Encodes g (no trailing newline).
inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  graph6_detail::append_order(out, n);
  int acc = 0;
  int nbits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + graph6_detail::kOffset));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + graph6_detail::kOffset));
  return out;
}

/// Decodes one graph6 string. A single trailing "\n" or "\r\n" is accepted.
/// Padding bits in the last byte are ignored, as the reference tools do.
inline Graph read_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  // Offsets reported below are relative to the (header-stripped) record.
  auto digit = [&](std::size_t pos) -> std::uint64_t {
    if (pos >= text.size()) throw ParseError("graph6: truncated order field", pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
    return c - 63u;
  };
  if (text.empty()) throw ParseError("graph6: empty record", 0);
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = digit(0);
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | digit(i);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | digit(i);
    pos = 4;
  }
  // Larger orders cannot be held in memory and would overflow the bit count.
  if (n > graph6_detail::kMaxReadOrder) throw ParseError("graph6: order " + std::to_string(n) + " too large", 0);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " data bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                     text.size() < pos + body ? text.size() : pos + body);
  }
  Graph::Builder builder(static_cast<std::size_t>(n));
  std::size_t i = 0;
  std::size_t j = 1;
  for (std::uint64_t b = 0; b < body; ++b) {
    const std::uint64_t chunk = digit(pos + b);
    for (int bit = 5; bit >= 0 && j < n; --bit) {
      if ((chunk >> bit) & 1u) builder.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return std::move(builder).build();
}

/// Reads every graph in a graph6 stream. Blank lines and a leading
/// ">>graph6<<" marker are skipped; the first whitespace-separated token of
/// each line is the record, so annotated tool output can be read back.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    const auto stop = line.find_first_of(" \t\r", start);
    const std::string_view token =
        std::string_view(line).substr(start, stop == std::string::npos ? std::string::npos : stop - start);
    try {
      out.push_back(read_graph6(token));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.detail(), e.offset());
    }
  }
  return out;
}

inline void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << write_graph6(g) << '\n';
}

}  // namespace domcyc
