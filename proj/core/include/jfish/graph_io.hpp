#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jfish/graph.hpp"

namespace jfish {

// Parse failure with the byte offset of the first offending character.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

enum class GraphFormat { Auto, Graph6, EdgeList };

// Header-less graph6 (the ">>graph6<<" prefix is not accepted).
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Whitespace-separated endpoint pairs, one edge per pair. Vertex count is
// max id + 1. Loops and repeated edges are rejected.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

std::string encode_dot(const Graph& g);

// Auto mode treats input whose first line contains whitespace-separated
// integers as an edge list, anything else as graph6.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

} // namespace jfish
