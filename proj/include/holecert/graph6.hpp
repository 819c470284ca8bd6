#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "holecert/graph.hpp"

namespace holecert {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one graph6 line. An optional ">>graph6<<" header and a trailing
/// line terminator are accepted. Orders up to kMaxOrder are supported.
Graph decode_graph6(std::string_view line);

/// Canonical graph6 text for the labelled graph (no header, no newline).
std::string encode_graph6(const Graph& g);

}  // namespace holecert
