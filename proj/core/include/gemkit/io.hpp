#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/errors.hpp"
#include "gemkit/genus.hpp"

namespace gemkit {

struct GraphMetadata {
  std::optional<std::string> expected_manifold;
  std::optional<int> m;
  std::optional<int> m_prime;
  std::optional<std::string> notes;
  /// Certification results shipped with catalog entries.
  std::optional<std::vector<int>> certified_betti;
  std::optional<Rational> certified_regular_genus;

  friend bool operator==(const GraphMetadata&, const GraphMetadata&) = default;
};

/// On-disk form of a colored graph (JSON). Edges are kept canonical: u < v,
/// sorted by (u, v, color).
struct GraphDocument {
  std::string name;
  int dimension = 0;
  int vertices = 0;
  std::vector<Edge> edges;
  std::optional<GraphMetadata> metadata;

  ColoredGraph graph() const;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Syntax or schema problem in a document. `field` names the offending key
/// (dotted path) for schema errors; `line`/`column` locate syntax errors.
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, std::string field, int line, int column, const std::string& what)
      : Error(code, what), field_(std::move(field)), line_(line), column_(column) {}

  const std::string& field() const { return field_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string field_;
  int line_;
  int column_;
};

/// Parses and validates. Throws DocumentError (SyntaxError / SchemaError) or
/// ValidationError from graph construction.
GraphDocument parse_graph(std::string_view text);
GraphDocument read_graph_file(const std::filesystem::path& path);

/// Canonical text: sorted keys, one edge per line, trailing newline.
std::string serialize_graph(const GraphDocument& doc);

GraphDocument make_document(std::string name, const ColoredGraph& g);

/// 64-bit FNV-1a over the canonical (dimension, vertices, edges) content, as
/// 16 lowercase hex digits.
std::string graph_hash(const ColoredGraph& g);

// --------------------------------------------------------------- catalog

/// Names of the embedded, certified crystallizations.
std::vector<std::string> catalog_names();

/// Throws UnknownCatalogEntry.
GraphDocument catalog(std::string_view name);

}  // namespace gemkit
