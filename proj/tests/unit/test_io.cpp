#include <doctest.h>

#include <gemkit/complex.hpp>
#include <gemkit/genus.hpp>
#include <gemkit/io.hpp>

#include "fixtures.hpp"

using namespace gemkit;

namespace {

DocumentError document_error(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const DocumentError& e) {
    return e;
  }
  FAIL("expected a DocumentError");
  return DocumentError(ErrorCode::SyntaxError, "", 0, 0, "");
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parse s4_2") {
    const auto doc = parse_graph(
        R"({"name":"s4_2","dimension":4,"vertices":2,"edges":[[0,1,0],[0,1,1],[0,1,2],[0,1,3],[0,1,4]]})");
    CHECK(doc.name == "s4_2");
    CHECK(doc.graph() == fixtures::s4_2());
    CHECK_FALSE(doc.metadata);
  }

  TEST_CASE("edges are stored canonically") {
    const auto doc = parse_graph(R"({"name":"c","dimension":1,"vertices":2,"edges":[[1,0,1],[1,0,0]]})");
    CHECK(doc.edges == std::vector<Edge>{{0, 1, 0}, {0, 1, 1}});
  }

  TEST_CASE("schema errors name the field") {
    auto e = document_error(R"({"name":"x","vertices":2,"edges":[]})");
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(e.field() == "dimension");
    CHECK(document_error(R"({"name":"x","dimension":"4","vertices":2,"edges":[]})").field() == "dimension");
    CHECK(document_error(R"({"name":"x","dimension":4.5,"vertices":2,"edges":[]})").field() == "dimension");
    CHECK(document_error(R"({"name":"x","dimension":4,"vertices":2,"edges":[[0,1]]})").field() == "edges[0]");
    CHECK(document_error(R"({"name":"x","dimension":4,"vertices":2,"edges":[],"extra":1})").field() == "extra");
    CHECK(document_error(R"({"name":"x","dimension":4,"vertices":2,"edges":[],"metadata":{"m":"one"}})").field() ==
          "metadata.m");
    CHECK(document_error(R"([1,2,3])").code() == ErrorCode::SchemaError);
  }

  TEST_CASE("syntax errors carry a position") {
    const auto e = document_error("{\n  \"name\": \"x\",\n  \"dimension\": 4,,\n}");
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }

  TEST_CASE("validation errors are forwarded") {
    try {
      parse_graph(R"({"name":"x","dimension":4,"vertices":2,"edges":[[0,0,3],[0,1,0],[0,1,1],[0,1,2],[0,1,4]]})");
      FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.has(IssueKind::LoopEdge));
    }
  }

  TEST_CASE("round trip on every catalog entry") {
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      const auto doc = catalog(name);
      const auto text = serialize_graph(doc);
      const auto again = parse_graph(text);
      CHECK(again == doc);
      CHECK(serialize_graph(again) == text);
      CHECK(text.back() == '\n');
    }
  }

  TEST_CASE("serialized form") {
    auto doc = make_document("circle", fixtures::circle2());
    CHECK(serialize_graph(doc) ==
          "{\n  \"dimension\": 1,\n  \"edges\": [\n    [0, 1, 0],\n    [0, 1, 1]\n  ],\n  \"name\": \"circle\",\n"
          "  \"vertices\": 2\n}\n");
    GraphMetadata meta;
    meta.m = 0;
    meta.certified_regular_genus = Rational(1, 2);
    doc.metadata = meta;
    const auto text = serialize_graph(doc);
    CHECK(text.find("\"certified_regular_genus\": {\"den\": 2, \"num\": 1}") != std::string::npos);
    CHECK(parse_graph(text) == doc);
  }

  TEST_CASE("catalog") {
    CHECK(catalog_names() == std::vector<std::string>{"s4_2", "s1xs3_8", "cp2_16", "singular_s1xs2_cone"});
    CHECK(catalog("s4_2").graph() == fixtures::s4_2());
    const auto s1 = catalog("s1xs3_8");
    CHECK(s1.metadata->m == 1);
    CHECK(is_bipartite(s1.graph()));
    try {
      catalog("unknown");
      FAIL("expected UnknownCatalogEntry");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownCatalogEntry);
    }
  }

  TEST_CASE("catalog metadata matches recomputation") {
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      const auto doc = catalog(name);
      const auto g = doc.graph();
      CHECK(homology_of(g).betti == doc.metadata->certified_betti.value());
      CHECK(regular_genus(g).minimum == doc.metadata->certified_regular_genus.value());
      CHECK(is_contracted(g));
    }
  }

  TEST_CASE("hash") {
    const auto h = graph_hash(fixtures::s4_2());
    CHECK(h.size() == 16);
    CHECK(h == graph_hash(catalog("s4_2").graph()));
    CHECK(h != graph_hash(fixtures::complete2(3)));
  }
}
