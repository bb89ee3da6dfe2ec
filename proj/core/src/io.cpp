#include "gemkit/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace gemkit {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& problem) {
  throw DocumentError(ErrorCode::SchemaError, field, 0, 0, "SchemaError(" + field + "): " + problem);
}

int require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) schema_error(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    schema_error(field, "integer out of range");
  return static_cast<int>(v);
}

std::string require_string(const json& j, const std::string& field) {
  if (!j.is_string()) schema_error(field, "expected a string");
  return j.get<std::string>();
}

const json& require_key(const json& obj, const std::string& key, const std::string& prefix = "") {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(prefix + key, "missing");
  return *it;
}

GraphMetadata parse_metadata(const json& j) {
  if (!j.is_object()) schema_error("metadata", "expected an object");
  GraphMetadata meta;
  for (const auto& [key, value] : j.items()) {
    const std::string field = "metadata." + key;
    if (key == "expected_manifold") {
      meta.expected_manifold = require_string(value, field);
    } else if (key == "notes") {
      meta.notes = require_string(value, field);
    } else if (key == "m") {
      meta.m = require_int(value, field);
    } else if (key == "m_prime") {
      meta.m_prime = require_int(value, field);
    } else if (key == "certified_betti") {
      if (!value.is_array()) schema_error(field, "expected an array");
      std::vector<int> betti;
      for (std::size_t i = 0; i < value.size(); ++i) betti.push_back(require_int(value[i], field));
      meta.certified_betti = std::move(betti);
    } else if (key == "certified_regular_genus") {
      if (!value.is_object()) schema_error(field, "expected {\"num\":a,\"den\":b}");
      const int num = require_int(require_key(value, "num", field + "."), field + ".num");
      const int den = require_int(require_key(value, "den", field + "."), field + ".den");
      if (den <= 0) schema_error(field + ".den", "must be positive");
      meta.certified_regular_genus = Rational(num, den);
    } else {
      schema_error(field, "unknown key");
    }
  }
  return meta;
}

std::pair<int, int> line_and_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

ColoredGraph GraphDocument::graph() const { return ColoredGraph::build(dimension, vertices, edges); }

GraphDocument parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte);
    throw DocumentError(ErrorCode::SyntaxError, "", line, column,
                        "SyntaxError at line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": " + e.what());
  }
  if (!j.is_object()) schema_error("<root>", "expected an object");

  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "dimension" && key != "vertices" && key != "edges" && key != "metadata")
      schema_error(key, "unknown key");

  GraphDocument doc;
  doc.name = require_string(require_key(j, "name"), "name");
  doc.dimension = require_int(require_key(j, "dimension"), "dimension");
  doc.vertices = require_int(require_key(j, "vertices"), "vertices");
  const json& edges = require_key(j, "edges");
  if (!edges.is_array()) schema_error("edges", "expected an array of [u, v, c] triples");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 3) schema_error(field, "expected [u, v, c]");
    Edge edge{require_int(e[0], field), require_int(e[1], field), require_int(e[2], field)};
    if (edge.u > edge.v) std::swap(edge.u, edge.v);
    doc.edges.push_back(edge);
  }
  std::sort(doc.edges.begin(), doc.edges.end());
  if (auto it = j.find("metadata"); it != j.end() && !it->is_null()) doc.metadata = parse_metadata(*it);

  (void)doc.graph();  // validation; throws ValidationError
  return doc;
}

GraphDocument read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(ErrorCode::SyntaxError, "", 0, 0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const GraphDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"dimension\": " << doc.dimension << ",\n";
  os << "  \"edges\": [";
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const Edge& e = doc.edges[i];
    os << (i ? ",\n" : "\n") << "    [" << e.u << ", " << e.v << ", " << e.color << "]";
  }
  os << (doc.edges.empty() ? "],\n" : "\n  ],\n");
  if (doc.metadata) {
    const GraphMetadata& m = *doc.metadata;
    std::vector<std::string> fields;
    if (m.certified_betti) {
      std::string s = "\"certified_betti\": [";
      for (std::size_t i = 0; i < m.certified_betti->size(); ++i)
        s += (i ? ", " : "") + std::to_string((*m.certified_betti)[i]);
      fields.push_back(s + "]");
    }
    if (m.certified_regular_genus)
      fields.push_back("\"certified_regular_genus\": {\"den\": " +
                       std::to_string(m.certified_regular_genus->denominator()) +
                       ", \"num\": " + std::to_string(m.certified_regular_genus->numerator()) + "}");
    if (m.expected_manifold) fields.push_back("\"expected_manifold\": " + quoted(*m.expected_manifold));
    if (m.m) fields.push_back("\"m\": " + std::to_string(*m.m));
    if (m.m_prime) fields.push_back("\"m_prime\": " + std::to_string(*m.m_prime));
    if (m.notes) fields.push_back("\"notes\": " + quoted(*m.notes));
    os << "  \"metadata\": {";
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? ",\n" : "\n") << "    " << fields[i];
    os << (fields.empty() ? "},\n" : "\n  },\n");
  }
  os << "  \"name\": " << quoted(doc.name) << ",\n";
  os << "  \"vertices\": " << doc.vertices << "\n";
  os << "}\n";
  return os.str();
}

GraphDocument make_document(std::string name, const ColoredGraph& g) {
  GraphDocument doc;
  doc.name = std::move(name);
  doc.dimension = g.dimension();
  doc.vertices = g.vertex_count();
  doc.edges.assign(g.edges().begin(), g.edges().end());
  return doc;
}

std::string graph_hash(const ColoredGraph& g) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](long long x) {
    const auto s = std::to_string(x) + ",";
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  };
  mix(g.dimension());
  mix(g.vertex_count());
  for (const Edge& e : g.edges()) {
    mix(e.u);
    mix(e.v);
    mix(e.color);
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace gemkit
