#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hc/graph.hpp"

namespace hc {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  size_t offset;
};

// Accepts an optional ">>graph6<<" header. Throws ParseError with the byte
// offset of the first offending character.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// One graph per line; blank lines are skipped.
std::vector<Graph> read_graph6_lines(const std::string& text);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace hc
