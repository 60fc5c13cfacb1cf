#ifndef TSDE_GRAPH_IO_HPP
#define TSDE_GRAPH_IO_HPP

#include <string>

#include "tsde/graph.hpp"

namespace tsde {

struct parse_error : error {
  size_t offset;
  parse_error(const std::string& msg, size_t at)
      : error(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

/// Renders `g{D=<D>,k=<k>}[<im_1,...,im_k>|...]`, 1-based images, one block
/// per colour. Disconnected graphs join components with '+'.
std::string render_graph(const ColouredGraph& g);
std::string render_graph(const DisconnectedGraph& g);

/// Canonical class string: canonical form rendered.
std::string class_string(const ColouredGraph& g);
std::string class_string(const DisconnectedGraph& g);

/// Parses the format above; throws parse_error with a byte offset on bad
/// syntax and on rows that are not bijections.
DisconnectedGraph parse_graph(const std::string& text);

/// Single-component convenience; rejects '+'-joined input.
ColouredGraph parse_connected_graph(const std::string& text);

}  // namespace tsde

#endif
