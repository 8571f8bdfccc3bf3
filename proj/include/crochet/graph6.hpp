#pragma once

#include <string>
#include <string_view>

#include "crochet/graph.hpp"

namespace crochet {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 text for g, without a trailing newline.
std::string graph6_encode(const Graph& g);

/// Parses one graph6 line. A single trailing '\n' (or "\r\n") is accepted, as is
/// the optional ">>graph6<<" header. Throws Graph6Error on malformed input.
Graph graph6_decode(std::string_view text);

}  // namespace crochet
