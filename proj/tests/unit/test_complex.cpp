#include <doctest.h>

#include <gemkit/complex.hpp>
#include <gemkit/errors.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gemkit;

namespace {

// Betti numbers from ranks over Q, independent of the Smith form.
std::vector<int> rational_betti(const PseudoComplex& cx) {
  const int d = cx.dimension();
  std::vector<int> rank(d + 2, 0);
  for (int k = 1; k <= d; ++k) rank[k] = oracle::rank(oracle::to_rows(boundary_matrix(cx, k)));
  std::vector<int> betti;
  for (int k = 0; k <= d; ++k) betti.push_back(cx.count(k) - rank[k] - rank[k + 1]);
  return betti;
}

}  // namespace

TEST_SUITE("complex_homology") {
  TEST_CASE("f-vector of s4_2") {
    const auto cx = build_complex(fixtures::s4_2());
    CHECK(cx.f_vector() == std::vector<int>{5, 10, 10, 5, 2});
    CHECK(euler_characteristic(cx) == 2);
  }

  TEST_CASE("circle from the 2-vertex 2-colored graph") {
    const auto cx = build_complex(fixtures::circle2());
    CHECK(cx.f_vector() == std::vector<int>{2, 2});
    CHECK(euler_characteristic(cx) == 0);
    const auto d1 = boundary_matrix(cx, 1);
    CHECK(d1.rows() == 2);
    CHECK(d1.cols() == 2);
    CHECK(smith_normal_form(d1).rank == 1);
    for (std::size_t c = 0; c < 2; ++c) CHECK(d1(0, c) + d1(1, c) == 0);
    CHECK(homology(cx).betti == std::vector<int>{1, 1});
  }

  TEST_CASE("f-vectors agree with the residue-count oracle") {
    for (const auto& name : catalog_names()) {
      const auto g = fixtures::catalog_graph(name);
      const auto cx = build_complex(g);
      CHECK(cx.f_vector() == oracle::f_vector(g));
      CHECK(cx.count(0) == 5);
      CHECK(euler_characteristic(cx) == oracle::euler(oracle::f_vector(g)));
    }
  }

  TEST_CASE("catalog homology") {
    const std::vector<std::pair<std::string, std::vector<int>>> expected = {
        {"s4_2", {1, 0, 0, 0, 1}},
        {"s1xs3_8", {1, 1, 0, 1, 1}},
        {"cp2_16", {1, 0, 1, 0, 1}},
        {"singular_s1xs2_cone", {1, 0, 0, 1, 1}},
    };
    for (const auto& [name, betti] : expected) {
      CAPTURE(name);
      const auto cx = build_complex(fixtures::catalog_graph(name));
      const auto h = homology(cx);
      CHECK(h.betti == betti);
      CHECK(h.torsion_free());
      CHECK(rational_betti(cx) == betti);
      CHECK(h.betti_euler() == euler_characteristic(cx));
    }
    CHECK(euler_characteristic(build_complex(fixtures::catalog_graph("s1xs3_8"))) == 0);
    CHECK(euler_characteristic(build_complex(fixtures::catalog_graph("cp2_16"))) == 3);
  }

  TEST_CASE("residue homology of the singular entry") {
    const auto g = fixtures::catalog_graph("singular_s1xs2_cone");
    CHECK(homology_of(residue_graph(g, 4)).betti == std::vector<int>{1, 1, 1, 1});
    CHECK(homology_of(residue_graph(g, 0)).betti == std::vector<int>{1, 0, 0, 1});
  }

  TEST_CASE("torsion is detected") {
    // K4 with a proper 3-coloring: a 3-colored gem of RP^2.
    const auto g = ColoredGraph::build(2, 4, {{0, 1, 0}, {2, 3, 0}, {1, 2, 1}, {0, 3, 1}, {0, 2, 2}, {1, 3, 2}});
    const auto h = homology_of(g);
    CHECK(h.betti == std::vector<int>{1, 0, 0});
    REQUIRE(h.torsion.size() == 3);
    CHECK(h.torsion[1] == std::vector<BigInt>{2});
    CHECK_FALSE(h.torsion_free());
    CHECK_FALSE(is_bipartite(g));
  }

  TEST_CASE("boundary composition vanishes") {
    for (const auto& name : catalog_names()) {
      const auto cx = build_complex(fixtures::catalog_graph(name));
      for (int k = 2; k <= 4; ++k) CHECK((boundary_matrix(cx, k - 1) * boundary_matrix(cx, k)).is_zero());
    }
  }

  TEST_CASE("boundary dimension range") {
    const auto cx = build_complex(fixtures::s4_2());
    CHECK_THROWS_AS(boundary_matrix(cx, 0), Error);
    CHECK_THROWS_AS(boundary_matrix(cx, 5), Error);
  }

  TEST_CASE("complex with boundary") {
    auto edges = fixtures::double_s4_edges();
    edges.pop_back();
    const auto g = ColoredGraph::build(4, 4, edges);
    REQUIRE(regularity_class(g) == RegularityClass::except(4));
    const auto cx = build_complex(g);
    CHECK(cx.f_vector() == oracle::f_vector(g));
  }

  TEST_CASE("irregular graphs are rejected") {
    try {
      build_complex(fixtures::triangle());
      FAIL("expected NotRegularEnough");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotRegularEnough);
    }
  }
}
