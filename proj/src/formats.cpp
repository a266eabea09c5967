#include "p4spec/formats.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "p4spec/dsl.hpp"

namespace p4spec {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return s.substr(s.size());
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
      ++j;
    }
    if (j > i) {
      out.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

std::optional<long long> parse_int(std::string_view token) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    return std::nullopt;
  }
  return value;
}

struct Line {
  std::size_t number;
  std::string_view content;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++number;
    auto line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') {
      out.push_back({number, line});
    }
    start = end + 1;
  }
  return out;
}

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

// ---------------------------------------------------------------------------

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
  const auto lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError("edge list: missing header line \"n m\"", 1);
  }
  const auto header = split_ws(lines.front().content);
  std::optional<long long> n;
  std::optional<long long> m;
  if (header.size() == 2) {
    n = parse_int(header[0]);
    m = parse_int(header[1]);
  }
  if (!n || !m || *n < 0 || *m < 0) {
    throw ParseError("edge list: header must be two non-negative integers \"n m\"", lines.front().number);
  }
  if (*n > max_vertices()) {
    throw ParseError("edge list: " + std::to_string(*n) + " vertices exceeds the configured maximum of " +
                         std::to_string(max_vertices()),
                     lines.front().number);
  }
  if (static_cast<long long>(lines.size()) - 1 != *m) {
    const std::size_t where = lines.size() > static_cast<std::size_t>(*m) + 1 ? lines[static_cast<std::size_t>(*m) + 1].number
                                                                              : lines.back().number;
    throw ParseError("edge list: header announces " + std::to_string(*m) + " edges but " +
                         std::to_string(lines.size() - 1) + " edge lines follow",
                     where);
  }
  GraphBuilder b(static_cast<int>(*n));
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto tokens = split_ws(line.content);
    std::optional<long long> u;
    std::optional<long long> v;
    if (tokens.size() == 2) {
      u = parse_int(tokens[0]);
      v = parse_int(tokens[1]);
    }
    if (!u || !v) {
      throw ParseError("edge list: line " + std::to_string(line.number) + " is not \"u v\"", line.number);
    }
    if (*u < 0 || *v < 0 || *u >= *n || *v >= *n) {
      throw ParseError("edge list: line " + std::to_string(line.number) + ": vertex out of range 0.." +
                           std::to_string(*n - 1),
                       line.number);
    }
    if (*u == *v) {
      throw ParseError("edge list: line " + std::to_string(line.number) + ": self-loop at vertex " +
                           std::to_string(*u),
                       line.number);
    }
    const Edge e{static_cast<Vertex>(std::min(*u, *v)), static_cast<Vertex>(std::max(*u, *v))};
    if (!seen.insert(e).second) {
      if (warnings != nullptr) {
        warnings->push_back("line " + std::to_string(line.number) + ": duplicate edge " + std::to_string(e.first) +
                            " " + std::to_string(e.second) + " collapsed");
      }
      continue;
    }
    b.add_edge(e.first, e.second);
  }
  return std::move(b).build();
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) {
    os << u << ' ' << v << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  std::size_t offset = static_cast<std::size_t>(s.data() - text.data());
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header) {
    s.remove_prefix(kGraph6Header.size());
    offset += kGraph6Header.size();
  }
  if (s.empty()) {
    throw ParseError("graph6: empty input", offset);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_graph6_char(s[i])) {
      throw ParseError("graph6: byte " + std::to_string(static_cast<unsigned char>(s[i])) + " at offset " +
                           std::to_string(offset + i) + " is outside 63..126",
                       offset + i);
    }
  }
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > s.size()) {
      throw ParseError("graph6: truncated size header", offset + s.size());
    }
    long long value = 0;
    for (std::size_t i = 0; i < count; ++i) {
      value = (value << 6) | (s[pos++] - 63);
    }
    return value;
  };
  long long n = 0;
  if (s[0] != '~') {
    n = take(1);
  } else if (s.size() >= 2 && s[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > max_vertices()) {
    throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds the configured maximum of " +
                         std::to_string(max_vertices()),
                     offset);
  }
  const long long bits = n * (n - 1) / 2;
  const auto needed = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos < needed) {
    throw ParseError("graph6: truncated bit stream: expected " + std::to_string(needed) + " data bytes, got " +
                         std::to_string(s.size() - pos),
                     offset + s.size());
  }
  if (s.size() - pos > needed) {
    throw ParseError("graph6: trailing bytes after the bit stream", offset + pos + needed);
  }
  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        b.add_edge(i, j);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = s[pos + needed - 1] - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", offset + pos + needed - 1);
    }
  }
  return std::move(b).build();
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SourceFormat format) {
  switch (format) {
    case SourceFormat::edge_list: return "edges";
    case SourceFormat::graph6: return "g6";
    case SourceFormat::dsl: return "dsl";
  }
  return "?";
}

std::optional<SourceFormat> parse_source_format(std::string_view name) {
  if (name == "edges" || name == "edge-list") {
    return SourceFormat::edge_list;
  }
  if (name == "g6" || name == "graph6") {
    return SourceFormat::graph6;
  }
  if (name == "dsl") {
    return SourceFormat::dsl;
  }
  return std::nullopt;
}

SourceFormat detect_format(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) {
    return SourceFormat::edge_list;
  }
  const auto first = split_ws(lines.front().content);
  if (first.size() == 2 && parse_int(first[0]) && parse_int(first[1])) {
    return SourceFormat::edge_list;
  }
  if (lines.size() == 1 && first.size() == 1) {
    std::string_view token = first.front();
    if (token.substr(0, kGraph6Header.size()) == kGraph6Header) {
      return SourceFormat::graph6;
    }
    bool all_g6 = !token.empty();
    for (char c : token) {
      all_g6 = all_g6 && is_graph6_char(c);
    }
    if (all_g6) {
      return SourceFormat::graph6;
    }
  }
  return SourceFormat::dsl;
}

std::string GraphDocument::serialize() const {
  return format == SourceFormat::graph6 ? to_graph6(graph) + "\n" : write_edge_list(graph);
}

GraphDocument load_document(std::string text, std::optional<SourceFormat> format) {
  const SourceFormat fmt = format.value_or(detect_format(text));
  GraphDocument doc{fmt, std::move(text), Graph{}, {}};
  switch (fmt) {
    case SourceFormat::edge_list: doc.graph = parse_edge_list(doc.text, &doc.warnings); break;
    case SourceFormat::graph6: doc.graph = parse_graph6(doc.text); break;
    case SourceFormat::dsl: doc.graph = parse_dsl(doc.text); break;
  }
  return doc;
}

}  // namespace p4spec
