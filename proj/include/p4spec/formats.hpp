#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "p4spec/graph.hpp"

namespace p4spec {

/// Malformed graph text. `position` is a 1-based line number for edge lists
/// and a 0-based byte offset for graph6 and the construction DSL.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Header line "n m" followed by m lines "u v" with 0-indexed endpoints.
/// Blank lines and lines starting with '#' are skipped. Duplicate edges are
/// collapsed and reported through `warnings` when given.
Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_edge_list(const Graph& g);

/// One graph6 line, optionally preceded by ">>graph6<<" and followed by a newline.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

enum class SourceFormat { edge_list, graph6, dsl };

std::string_view to_string(SourceFormat format);
std::optional<SourceFormat> parse_source_format(std::string_view name);

/// Guesses the format of `text`: a leading "n m" line means an edge list, a
/// single token of graph6 characters means graph6, anything else is DSL.
SourceFormat detect_format(std::string_view text);

struct GraphDocument {
  SourceFormat format;
  std::string text;
  Graph graph;
  std::vector<std::string> warnings;

  /// The parsed graph re-encoded in the document's own format (DSL documents
  /// re-serialize as edge lists).
  std::string serialize() const;
};

GraphDocument load_document(std::string text, std::optional<SourceFormat> format = std::nullopt);

}  // namespace p4spec
