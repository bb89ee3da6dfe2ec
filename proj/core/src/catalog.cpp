#include <algorithm>
#include <array>

#include "gemkit/io.hpp"

namespace gemkit {

namespace {

struct Entry {
  const char* name;
  int vertices;
  std::vector<std::array<int, 3>> edges;
  const char* manifold;
  std::optional<int> m;
  std::optional<int> m_prime;
  const char* notes;
  std::vector<int> betti;
  long long genus;
};

// Certified offline: homology of K(Gamma), regular genus over all cyclic
// orders, and the residue verdicts. The unit tests recompute all of them.
const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {"s4_2",
       2,
       {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}},
       "S4",
       0,
       std::nullopt,
       "standard 2-vertex crystallization of the 4-sphere",
       {1, 0, 0, 0, 1},
       0},
      {"s1xs3_8",
       10,
       {{0, 5, 0}, {0, 5, 1}, {0, 5, 2}, {0, 6, 3}, {0, 9, 4}, {1, 5, 3}, {1, 6, 0}, {1, 6, 1}, {1, 6, 4},
        {1, 7, 2}, {2, 6, 2}, {2, 7, 0}, {2, 7, 3}, {2, 7, 4}, {2, 8, 1}, {3, 5, 4}, {3, 8, 0}, {3, 9, 1},
        {3, 9, 2}, {3, 9, 3}, {4, 7, 1}, {4, 8, 2}, {4, 8, 3}, {4, 8, 4}, {4, 9, 0}},
       "S1xS3",
       1,
       std::nullopt,
       "semi-simple with m = 1; this forces g_ijk = 2 and 10 vertices",
       {1, 1, 0, 1, 1},
       1},
      {"cp2_16",
       8,
       {{0, 4, 0}, {0, 4, 1}, {0, 5, 2}, {0, 5, 3}, {0, 6, 4}, {1, 4, 2}, {1, 5, 0}, {1, 6, 1}, {1, 6, 3},
        {1, 7, 4}, {2, 4, 3}, {2, 4, 4}, {2, 6, 0}, {2, 7, 1}, {2, 7, 2}, {3, 5, 1}, {3, 5, 4}, {3, 6, 2},
        {3, 7, 0}, {3, 7, 3}},
       "CP2",
       0,
       std::nullopt,
       "simple crystallization; g_ij = 2 for every consecutive pair of (0,1,2,3,4)",
       {1, 0, 1, 0, 1},
       2},
      {"singular_s1xs2_cone",
       8,
       {{0, 4, 0}, {0, 4, 1}, {0, 4, 4}, {0, 5, 2}, {0, 7, 3}, {1, 4, 2}, {1, 5, 0}, {1, 5, 3}, {1, 5, 4},
        {1, 6, 1}, {2, 4, 3}, {2, 6, 0}, {2, 7, 1}, {2, 7, 2}, {2, 7, 4}, {3, 5, 1}, {3, 6, 2}, {3, 6, 3},
        {3, 6, 4}, {3, 7, 0}},
       "cone over the boundary of S1xB3",
       1,
       0,
       "color 4 is singular; the 4-hat residue is an S1xS2 gem",
       {1, 0, 0, 1, 1},
       1},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.emplace_back(e.name);
  return out;
}

GraphDocument catalog(std::string_view name) {
  const auto& table = entries();
  auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return name == e.name; });
  if (it == table.end()) throw Error(ErrorCode::UnknownCatalogEntry, "unknown catalog entry '" + std::string(name) + "'");

  GraphDocument doc;
  doc.name = it->name;
  doc.dimension = 4;
  doc.vertices = it->vertices;
  for (const auto& [u, v, c] : it->edges) doc.edges.push_back({u, v, c});
  std::sort(doc.edges.begin(), doc.edges.end());
  GraphMetadata meta;
  meta.expected_manifold = it->manifold;
  meta.m = it->m;
  meta.m_prime = it->m_prime;
  meta.notes = it->notes;
  meta.certified_betti = it->betti;
  meta.certified_regular_genus = Rational(it->genus);
  doc.metadata = meta;
  return doc;
}

}  // namespace gemkit
