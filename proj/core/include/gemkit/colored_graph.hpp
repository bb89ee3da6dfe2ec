#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gemkit {

using Color = int;
using VertexId = int;

/// Largest supported dimension; colors live in a 32-bit mask.
inline constexpr int kMaxDimension = 30;

/// Subset of the color set {0, ..., d}, stored as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}
  ColorSet(std::initializer_list<Color> colors);

  /// {0, ..., d}
  static constexpr ColorSet all(int dimension) {
    return ColorSet((dimension + 1 >= 32) ? ~0u : ((1u << (dimension + 1)) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(Color c) const { return c >= 0 && c < 32 && (bits_ >> c) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;

  constexpr ColorSet with(Color c) const { return ColorSet(bits_ | (1u << c)); }
  constexpr ColorSet without(Color c) const { return ColorSet(bits_ & ~(1u << c)); }
  constexpr ColorSet complement_in(int dimension) const {
    return ColorSet(all(dimension).bits_ & ~bits_);
  }
  constexpr bool is_subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }

  /// Members in increasing order.
  std::vector<Color> colors() const;
  /// Position of c among the members in increasing order, or -1.
  int position(Color c) const;

  std::string to_string() const;

  friend constexpr auto operator<=>(ColorSet, ColorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Color color = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// A properly edge-colored multigraph with colors {0, ..., d}. Values are
/// immutable once built; the edge list is canonical (u < v, sorted).
class ColoredGraph {
 public:
  /// Validates and canonicalizes. Throws ValidationError listing every
  /// violated invariant.
  static ColoredGraph build(int dimension, int vertex_count, std::vector<Edge> edges);

  int dimension() const { return dimension_; }
  int color_count() const { return dimension_ + 1; }
  int vertex_count() const { return vertex_count_; }
  std::span<const Edge> edges() const { return edges_; }

  /// The c-neighbour of v, if v has a c-colored edge.
  std::optional<VertexId> neighbor(VertexId v, Color c) const;
  int degree(VertexId v) const;
  int edge_count(Color c) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  ColoredGraph() = default;

  int dimension_ = 0;
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  // adjacency_[v * (d+1) + c] = neighbour or -1
  std::vector<VertexId> adjacency_;
};

struct RegularityClass {
  enum class Kind { FullyRegular, RegularExceptColor, Irregular };

  Kind kind = Kind::Irregular;
  /// Meaningful only for RegularExceptColor.
  Color color = -1;

  static RegularityClass fully_regular() { return {Kind::FullyRegular, -1}; }
  static RegularityClass except(Color c) { return {Kind::RegularExceptColor, c}; }
  static RegularityClass irregular() { return {Kind::Irregular, -1}; }

  std::string to_string() const;
  friend bool operator==(const RegularityClass&, const RegularityClass&) = default;
};

RegularityClass regularity_class(const ColoredGraph& g);

/// Connected components of the subgraph keeping only edges colored in `colors`.
struct ResiduePartition {
  ColorSet colors;
  /// Sorted by minimum vertex id; each component sorted.
  std::vector<std::vector<VertexId>> components;
  /// component_of[v] indexes `components`.
  std::vector<int> component_of;

  int count() const { return static_cast<int>(components.size()); }
};

ResiduePartition residue(const ColoredGraph& g, ColorSet colors);

/// Component counts g_B for every color subset B with 1 <= |B| <= d.
class GProfile {
 public:
  GProfile(int dimension, std::vector<int> counts_by_mask);

  int dimension() const { return dimension_; }
  /// g_B; B must be a nonempty proper subset of the color set.
  int count(ColorSet colors) const;
  int count(std::initializer_list<Color> colors) const { return count(ColorSet(colors)); }

  friend bool operator==(const GProfile&, const GProfile&) = default;

 private:
  int dimension_;
  std::vector<int> counts_;
};

GProfile g_profile(const ColoredGraph& g);

bool is_contracted(const ColoredGraph& g);
bool is_bipartite(const ColoredGraph& g);
bool is_connected(const ColoredGraph& g);

/// The residue graph keeping only colors in `colors`, restricted to one of its
/// components (by index into residue(g, colors)), with vertices renumbered in
/// increasing order and colors relabeled to 0..|colors|-1 preserving order.
ColoredGraph residue_component_graph(const ColoredGraph& g, ColorSet colors, int component);

/// Gamma with color c removed, as a (d-1)-dimensional graph. Throws
/// DisconnectedResidue if that residue is not connected.
ColoredGraph residue_graph(const ColoredGraph& g, Color c);

/// Applies a color relabeling; mapping[old] = new must be a permutation.
ColoredGraph relabel_colors(const ColoredGraph& g, std::span<const Color> mapping);

}  // namespace gemkit
