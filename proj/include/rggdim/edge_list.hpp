#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rggdim/adjacency.hpp"

namespace rggdim {

/// An undirected edge list with string node labels.
struct EdgeListDocument {
  std::vector<std::string> node_labels;  // distinct, in first-seen order
  std::vector<Edge> edges;               // indices into node_labels, first < second
  std::size_t skipped_self_loops = 0;
  std::size_t deduplicated = 0;
  std::size_t lines_with_extra_columns = 0;  // third and later tokens were dropped

  /// Graph on max(node_labels.size(), min_nodes) nodes. Nodes beyond the
  /// labelled ones are isolated.
  AdjacencyMatrix to_adjacency(std::size_t min_nodes = 0) const;
};

/// Parses whitespace- or comma-separated "u v [ignored...]" lines. Blank lines
/// and lines whose first non-blank character is '#' or '%' are skipped. Labels
/// are numbered in first-seen order, including labels that only occur in a
/// self-loop. Throws EncodingError on invalid UTF-8 and ParseError on a line
/// holding a single token.
EdgeListDocument parse_edge_list(std::string_view text);
EdgeListDocument parse_edge_list(std::istream& in);

/// Writes each header line prefixed with "# ", then one "i j" line per edge
/// (0-based, i < j, ascending).
void write_edge_list(std::ostream& out, const AdjacencyMatrix& a,
                     const std::vector<std::string>& header = {});

/// Locale-independent shortest text for integers, 17 significant digits
/// otherwise; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double value);

}  // namespace rggdim
