#include "rggdim/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

#include "rggdim/error.hpp"

namespace rggdim {
namespace {

// Returns the byte offset of the first invalid sequence, or npos.
std::size_t find_invalid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                          (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_separator(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_separator(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

AdjacencyMatrix EdgeListDocument::to_adjacency(std::size_t min_nodes) const {
  return from_edge_pairs(std::max(node_labels.size(), min_nodes), edges);
}

EdgeListDocument parse_edge_list(std::string_view text) {
  if (const auto bad = find_invalid_utf8(text); bad != std::string_view::npos) {
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(bad), '\n');
    throw EncodingError("invalid UTF-8 at byte " + std::to_string(bad) + " (line " +
                        std::to_string(line) + ")");
  }

  EdgeListDocument doc;
  std::unordered_map<std::string, NodeId> index;
  std::set<Edge> seen;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = index.try_emplace(std::string(label), doc.node_labels.size());
    if (inserted) doc.node_labels.emplace_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto first = line.find_first_not_of(" \t\r\v\f");
    if (first == std::string_view::npos || line[first] == '#' || line[first] == '%') continue;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two node labels, found one",
                       line_no);
    }
    if (tokens.size() > 2) ++doc.lines_with_extra_columns;

    const NodeId u = intern(tokens[0]);
    const NodeId v = intern(tokens[1]);
    if (u == v) {
      ++doc.skipped_self_loops;
      continue;
    }
    const Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) {
      ++doc.deduplicated;
      continue;
    }
    doc.edges.push_back(e);
  }
  return doc;
}

EdgeListDocument parse_edge_list(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_edge_list(std::string_view(text));
}

void write_edge_list(std::ostream& out, const AdjacencyMatrix& a,
                     const std::vector<std::string>& header) {
  for (const auto& line : header) out << "# " << line << '\n';
  for (const auto& [i, j] : a.edges()) out << i << ' ' << j << '\n';
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace rggdim
