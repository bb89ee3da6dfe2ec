#include "gemkit/colored_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "gemkit/errors.hpp"

namespace gemkit {

// -------------------------------------------------------------- ColorSet

ColorSet::ColorSet(std::initializer_list<Color> colors) {
  for (Color c : colors) {
    if (c < 0 || c >= 32) throw Error(ErrorCode::ColorOutOfRange, "color out of range");
    bits_ |= 1u << c;
  }
}

int ColorSet::size() const { return std::popcount(bits_); }

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (Color c = 0; c < 32; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

int ColorSet::position(Color c) const {
  if (!contains(c)) return -1;
  return std::popcount(bits_ & ((1u << c) - 1u));
}

std::string ColorSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Color c : colors()) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------- ColoredGraph

ColoredGraph ColoredGraph::build(int dimension, int vertex_count, std::vector<Edge> edges) {
  std::vector<ValidationIssue> issues;
  if (dimension < 1 || dimension > kMaxDimension) {
    issues.push_back({IssueKind::BadDimension});
    throw ValidationError(std::move(issues));
  }
  if (vertex_count < 1) {
    issues.push_back({IssueKind::BadVertexCount});
    throw ValidationError(std::move(issues));
  }

  const int colors = dimension + 1;
  std::vector<VertexId> adjacency(static_cast<std::size_t>(vertex_count) * colors, -1);
  std::vector<bool> color_seen(colors, false);
  std::vector<bool> duplicate_reported(adjacency.size(), false);

  auto claim = [&](VertexId v, Color c, VertexId other) {
    auto slot = static_cast<std::size_t>(v) * colors + c;
    if (adjacency[slot] != -1) {
      if (!duplicate_reported[slot]) issues.push_back({IssueKind::DuplicateColorAtVertex, v, c});
      duplicate_reported[slot] = true;
      return;
    }
    adjacency[slot] = other;
  };

  for (auto& e : edges) {
    bool ok = true;
    for (VertexId x : {e.u, e.v}) {
      if (x < 0 || x >= vertex_count) {
        issues.push_back({IssueKind::BadVertexId, x, e.color});
        ok = false;
      }
    }
    if (e.color < 0 || e.color >= colors) {
      issues.push_back({IssueKind::BadColor, -1, e.color});
      ok = false;
    }
    if (e.u == e.v) {
      issues.push_back({IssueKind::LoopEdge, e.u, e.color});
      ok = false;
    }
    if (!ok) continue;
    if (e.u > e.v) std::swap(e.u, e.v);
    color_seen[e.color] = true;
    claim(e.u, e.color, e.v);
    claim(e.v, e.color, e.u);
  }
  for (Color c = 0; c < colors; ++c)
    if (!color_seen[c]) issues.push_back({IssueKind::MissingColor, -1, c});
  if (!issues.empty()) throw ValidationError(std::move(issues));

  std::sort(edges.begin(), edges.end());
  ColoredGraph g;
  g.dimension_ = dimension;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.adjacency_ = std::move(adjacency);
  return g;
}

std::optional<VertexId> ColoredGraph::neighbor(VertexId v, Color c) const {
  if (v < 0 || v >= vertex_count_ || c < 0 || c > dimension_) return std::nullopt;
  VertexId w = adjacency_[static_cast<std::size_t>(v) * color_count() + c];
  if (w < 0) return std::nullopt;
  return w;
}

int ColoredGraph::degree(VertexId v) const {
  int deg = 0;
  for (Color c = 0; c <= dimension_; ++c)
    if (neighbor(v, c)) ++deg;
  return deg;
}

int ColoredGraph::edge_count(Color c) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [c](const Edge& e) { return e.color == c; }));
}

// ------------------------------------------------------------ regularity

std::string RegularityClass::to_string() const {
  switch (kind) {
    case Kind::FullyRegular: return "FullyRegular";
    case Kind::RegularExceptColor: return "RegularExceptColor(" + std::to_string(color) + ")";
    case Kind::Irregular: return "Irregular";
  }
  return "Irregular";
}

RegularityClass regularity_class(const ColoredGraph& g) {
  const int d = g.dimension();
  std::vector<int> missing_count(g.color_count(), 0);
  bool all_full = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (Color c = 0; c <= d; ++c) {
      if (!g.neighbor(v, c)) {
        ++missing_count[c];
        all_full = false;
      }
    }
  }
  if (all_full) return RegularityClass::fully_regular();
  // Regular with respect to c: every other color is a perfect matching.
  for (Color c = 0; c <= d; ++c) {
    if (missing_count[c] == 0) continue;
    bool others_full = true;
    for (Color o = 0; o <= d && others_full; ++o)
      if (o != c && missing_count[o] != 0) others_full = false;
    if (others_full) return RegularityClass::except(c);
  }
  return RegularityClass::irregular();
}

// -------------------------------------------------------------- residues

ResiduePartition residue(const ColoredGraph& g, ColorSet colors) {
  if (!colors.is_subset_of(ColorSet::all(g.dimension())))
    throw Error(ErrorCode::ColorOutOfRange, "color set " + colors.to_string() + " exceeds dimension");

  const int n = g.vertex_count();
  ResiduePartition part;
  part.colors = colors;
  part.component_of.assign(n, -1);
  const auto members = colors.colors();
  std::vector<VertexId> stack;
  // Scanning vertices in increasing order yields components sorted by their minimum.
  for (VertexId start = 0; start < n; ++start) {
    if (part.component_of[start] != -1) continue;
    const int id = part.count();
    part.components.emplace_back();
    auto& comp = part.components.back();
    part.component_of[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Color c : members) {
        auto w = g.neighbor(v, c);
        if (w && part.component_of[*w] == -1) {
          part.component_of[*w] = id;
          stack.push_back(*w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return part;
}

GProfile::GProfile(int dimension, std::vector<int> counts_by_mask)
    : dimension_(dimension), counts_(std::move(counts_by_mask)) {}

int GProfile::count(ColorSet colors) const {
  if (colors.empty() || !colors.is_subset_of(ColorSet::all(dimension_)) ||
      colors == ColorSet::all(dimension_))
    throw Error(ErrorCode::ColorOutOfRange,
                "g-profile is defined for nonempty proper color subsets, got " + colors.to_string());
  return counts_[colors.bits()];
}

GProfile g_profile(const ColoredGraph& g) {
  const std::uint32_t full = ColorSet::all(g.dimension()).bits();
  std::vector<int> counts(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t mask = 1; mask < full; ++mask) counts[mask] = residue(g, ColorSet(mask)).count();
  return GProfile(g.dimension(), std::move(counts));
}

bool is_contracted(const ColoredGraph& g) {
  const ColorSet all = ColorSet::all(g.dimension());
  for (Color c = 0; c <= g.dimension(); ++c)
    if (residue(g, all.without(c)).count() != 1) return false;
  return true;
}

bool is_connected(const ColoredGraph& g) {
  return residue(g, ColorSet::all(g.dimension())).count() == 1;
}

bool is_bipartite(const ColoredGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (Color c = 0; c <= g.dimension(); ++c) {
        auto w = g.neighbor(v, c);
        if (!w) continue;
        if (side[*w] == -1) {
          side[*w] = 1 - side[v];
          queue.push_back(*w);
        } else if (side[*w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

ColoredGraph residue_component_graph(const ColoredGraph& g, ColorSet colors, int component) {
  auto part = residue(g, colors);
  if (component < 0 || component >= part.count())
    throw Error(ErrorCode::DisconnectedResidue, "residue component index out of range");
  const auto& verts = part.components[component];
  std::vector<VertexId> renumber(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) renumber[verts[i]] = static_cast<VertexId>(i);

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!colors.contains(e.color) || renumber[e.u] < 0) continue;
    edges.push_back({renumber[e.u], renumber[e.v], colors.position(e.color)});
  }
  return ColoredGraph::build(colors.size() - 1, static_cast<int>(verts.size()), std::move(edges));
}

ColoredGraph residue_graph(const ColoredGraph& g, Color c) {
  if (c < 0 || c > g.dimension())
    throw Error(ErrorCode::ColorOutOfRange, "color " + std::to_string(c) + " out of range");
  if (g.dimension() < 2)
    throw Error(ErrorCode::DimensionOutOfRange, "residue graphs need dimension >= 2");
  const ColorSet rest = ColorSet::all(g.dimension()).without(c);
  if (residue(g, rest).count() != 1)
    throw Error(ErrorCode::DisconnectedResidue,
                "residue without color " + std::to_string(c) + " is disconnected");
  return residue_component_graph(g, rest, 0);
}

ColoredGraph relabel_colors(const ColoredGraph& g, std::span<const Color> mapping) {
  if (static_cast<int>(mapping.size()) != g.color_count())
    throw Error(ErrorCode::ColorOutOfRange, "relabeling must cover every color");
  std::vector<bool> hit(g.color_count(), false);
  for (Color c : mapping) {
    if (c < 0 || c > g.dimension() || hit[c])
      throw Error(ErrorCode::ColorOutOfRange, "relabeling is not a permutation");
    hit[c] = true;
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.color = mapping[e.color];
  return ColoredGraph::build(g.dimension(), g.vertex_count(), std::move(edges));
}

}  // namespace gemkit
