#include "crochet/graph6.hpp"

namespace crochet {

namespace {
constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kOffset + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(kOffset + ((n >> shift) & 0x3f)));
    }
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(kOffset + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(kOffset + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  auto value = [&](std::size_t pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > 126) {
      throw Graph6Error("invalid graph6 character at position " + std::to_string(pos));
    }
    return c - kOffset;
  };

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error("truncated graph6 vertex count");
    if (text[1] == '~') throw Graph6Error("graph6 vertex count exceeds 128");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  }
  if (n > Graph::kMaxVertices) {
    throw Graph6Error("graph6 vertex count " + std::to_string(n) + " exceeds 128");
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos < chars) throw Graph6Error("truncated graph6 bit stream");
  if (text.size() - pos > chars) throw Graph6Error("trailing characters after graph6 bit stream");

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = value(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < chars * 6; ++k) {
    if ((value(pos + k / 6) >> (5 - k % 6)) & 1) throw Graph6Error("nonzero graph6 padding bits");
  }
  if (chars == 0 && pos < text.size()) throw Graph6Error("trailing characters after graph6 bit stream");
  return g;
}

}  // namespace crochet
