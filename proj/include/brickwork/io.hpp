#pragma once

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brickwork/graph.hpp"

namespace brickwork {

// graph6 / sparse6 follow the format description shipped with nauty.
// Input lines may carry the optional ">>graph6<<" / ">>sparse6<<" header
// and a trailing newline; malformed input raises ParseError with the byte
// offset of the first offending character.

MultiGraph parse_graph6(std::string_view line);
/// Throws UnsupportedFormat for graphs with parallel edges.
std::string emit_graph6(const MultiGraph& g);

/// sparse6 can express parallel edges; loops are rejected on input.
MultiGraph parse_sparse6(std::string_view line);
std::string emit_sparse6(const MultiGraph& g);

/// Plain multigraph text: "n m" followed by m lines "u v" (0-based).
/// Repeated pairs are parallel edges.
MultiGraph parse_edge_list(std::string_view text);
/// Edges in id order, one per line, endpoints as stored.
std::string emit_edge_list(const MultiGraph& g);

struct DotHighlight {
  std::vector<EdgeId> edges;
  std::string color;
  std::string label;
};
/// Undirected DOT; parallel edges are repeated statements. Highlighted edges
/// get their group's colour, a bold pen and the group label.
std::string emit_dot(const MultiGraph& g, std::span<const DotHighlight> highlights = {},
                     std::string_view name = "G");

enum class Format { graph6, sparse6, edgelist, dot };

/// Accepts g6/graph6, s6/sparse6, edgelist/el, dot.
Format parse_format(std::string_view name);
std::string emit(const MultiGraph& g, Format format);

/// Streams graphs from text: one graph6/sparse6 record per line (blank lines
/// ignored), or consecutive edge-list records. DOT is output only.
class GraphReader {
 public:
  GraphReader(std::istream& in, Format format);

  /// Next graph, or nullopt at end of input. Parse errors carry an offset
  /// relative to the start of the stream.
  std::optional<MultiGraph> next();

 private:
  std::optional<std::string> next_token();

  std::istream& in_;
  Format format_;
  std::size_t offset_ = 0;
  std::vector<std::string> pending_;
};

std::vector<MultiGraph> read_all(std::istream& in, Format format);

}  // namespace brickwork
