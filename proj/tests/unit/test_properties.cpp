#include <doctest.h>

#include <numeric>
#include <random>

#include <gemkit/analysis.hpp>
#include <gemkit/complex.hpp>
#include <gemkit/errors.hpp>
#include <gemkit/genus.hpp>
#include <gemkit/io.hpp>
#include <gemkit/report.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gemkit;

namespace {

std::vector<ColoredGraph> catalog_graphs() {
  std::vector<ColoredGraph> out;
  for (const auto& name : catalog_names()) out.push_back(catalog(name).graph());
  return out;
}

/// Random graphs reachable from the catalog by Kempe swaps and vertex
/// renumbering. They stay 5-regular, proper and connected.
std::vector<ColoredGraph> scrambled(std::uint32_t seed, int count) {
  std::mt19937 rng(seed);
  const auto base = catalog_graphs();
  std::vector<ColoredGraph> out;
  for (int t = 0; t < count; ++t) {
    ColoredGraph g = base[rng() % base.size()];
    for (int step = 0; step < 3; ++step) {
      int i = static_cast<int>(rng() % 5);
      int j = static_cast<int>(rng() % 4);
      if (j >= i) ++j;
      g = ColoredGraph::build(4, g.vertex_count(), oracle::kempe_swap(g, i, j, rng() % g.vertex_count()));
    }
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    g = ColoredGraph::build(4, g.vertex_count(), oracle::permute_vertices(g, perm));
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("color permutations preserve bipartiteness, contractedness and homology") {
    std::mt19937 rng(7);
    std::vector<Color> colors{0, 1, 2, 3, 4};
    for (const auto& g : catalog_graphs()) {
      for (int t = 0; t < 5; ++t) {
        std::shuffle(colors.begin(), colors.end(), rng);
        const auto h = relabel_colors(g, colors);
        CHECK(is_bipartite(h) == is_bipartite(g));
        CHECK(is_contracted(h) == is_contracted(g));
        CHECK(homology_of(h) == homology_of(g));
        CHECK(regular_genus(h).minimum == regular_genus(g).minimum);
      }
    }
    for (const auto& g : scrambled(11, 12)) {
      std::shuffle(colors.begin(), colors.end(), rng);
      CHECK(is_bipartite(relabel_colors(g, colors)) == is_bipartite(g));
    }
  }

  TEST_CASE("g counts weakly decrease as colors are added") {
    for (const auto& g : scrambled(3, 10)) {
      const auto p = g_profile(g);
      for (std::uint32_t a = 1; a < 31; ++a)
        for (Color c = 0; c < 5; ++c) {
          const ColorSet s(a);
          if (s.contains(c) || s.with(c) == ColorSet::all(4)) continue;
          CHECK(p.count(s.with(c)) <= p.count(s));
        }
      // Bicolored residues are cycles with at least two vertices.
      for (std::uint32_t a = 1; a < 31; ++a)
        if (ColorSet(a).size() == 2) CHECK(p.count(ColorSet(a)) <= g.vertex_count() / 2);
    }
  }

  TEST_CASE("rho_epsilon is invariant under rotation and reversal") {
    std::mt19937 rng(5);
    for (const auto& g : scrambled(17, 6)) {
      for (const auto& eps : cyclic_permutations(4)) {
        auto order = eps.order();
        std::rotate(order.begin(), order.begin() + static_cast<long>(rng() % 5), order.end());
        if (rng() % 2) std::reverse(order.begin(), order.end());
        CHECK(oracle::chi_eps(g, order) == chi_epsilon(g, eps));
        CHECK(rho_epsilon(g, CyclicPermutation(order)) == rho_epsilon(g, eps));
      }
    }
  }

  TEST_CASE("chi_epsilon agrees with the face trace on scrambled graphs") {
    for (const auto& g : scrambled(23, 8))
      for (const auto& eps : cyclic_permutations(4)) CHECK(chi_epsilon(g, eps) == face_trace_oracle(g, eps));
  }

  TEST_CASE("boundary of a boundary vanishes on scrambled graphs") {
    for (const auto& g : scrambled(29, 8)) {
      const auto cx = build_complex(g);
      for (int k = 2; k <= 4; ++k) CHECK((boundary_matrix(cx, k - 1) * boundary_matrix(cx, k)).is_zero());
      CHECK(homology(cx).betti_euler() == euler_characteristic(cx));
    }
  }

  TEST_CASE("identities hold on every contracted scrambled closed graph") {
    int evaluated = 0;
    for (const auto& g : scrambled(31, 30)) {
      if (!is_contracted(g)) {
        try {
          verify_identities_closed(g);
          FAIL("non-contracted graph accepted");
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::NotCrystallization);
        }
        continue;
      }
      if (!classify(g).closed_candidate()) continue;
      CHECK(verify_identities_closed(g).all_hold());
      ++evaluated;
    }
    CHECK(evaluated > 0);
  }

  TEST_CASE("reports do not depend on the worker count") {
    for (const auto& name : catalog_names()) {
      const auto doc = catalog(name);
      ReportRequest one;
      ReportRequest many;
      many.workers = 6;
      CHECK(to_json(build_report(doc, one)) == to_json(build_report(doc, many)));
      CHECK(to_text(build_report(doc, one)) == to_text(build_report(doc, many)));
    }
  }

  TEST_CASE("serialization round trip is idempotent") {
    int i = 0;
    for (const auto& g : scrambled(37, 10)) {
      const auto doc = make_document("scrambled-" + std::to_string(i++), g);
      const auto once = parse_graph(serialize_graph(doc));
      const auto twice = parse_graph(serialize_graph(once));
      CHECK(once == twice);
      CHECK(once.graph() == g);
      CHECK(graph_hash(once.graph()) == graph_hash(g));
    }
  }
}
