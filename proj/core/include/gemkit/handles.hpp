#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/analysis.hpp"
#include "gemkit/colored_graph.hpp"

namespace gemkit {

/// Handle counts (h0, ..., h4). Attaching maps are not modelled.
struct HandleVector {
  std::array<int, 5> counts{};

  int operator[](int k) const { return counts.at(k); }
  long long alternating_sum() const;
  std::string to_string() const;

  friend bool operator==(const HandleVector&, const HandleVector&) = default;
};

enum class DecompositionMode { Closed, Boundary };

enum class Cap {
  None,
  /// Remaining piece glued along the boundary: S^1 x B^3.
  CircleTimesBall,
  /// A single 3-handle; only valid if 3-handles attach uniquely with boundary.
  ConditionalThreeHandle,
};

std::string to_string(Cap cap);

struct DecompositionVariant {
  std::string label;  // "(1)" or "(2)"
  /// Closed mode: all five entries. Boundary mode: h0..h2 only, h3 = h4 = 0,
  /// plus h3 = 1 in the conditional forms.
  HandleVector handles;
  Cap cap = Cap::None;
  /// False for forms that depend on an unproved attachment statement.
  bool asserted = true;
  /// The beta1(V') value that leads to this variant (2 or 1).
  int beta1_vprime = 0;
};

struct DecompositionReport {
  DecompositionMode mode = DecompositionMode::Closed;
  int beta2 = 0;
  std::vector<DecompositionVariant> variants;
  std::vector<DecompositionVariant> conditional;
  /// Closed mode: every variant alternates to chi = beta2.
  bool chi_certificate = false;
  /// Set when V' splitting data was supplied; selects which label applies.
  std::optional<std::string> realized_label;
  std::string provenance;
};

DecompositionReport predict_closed(int beta2, const std::optional<VPrimeReport>& vprime = std::nullopt);
DecompositionReport predict_boundary(int beta2, const std::optional<VPrimeReport>& vprime = std::nullopt);

bool chi_consistency(const HandleVector& hv, long long chi);

/// Data about the split of K(Gamma) along a color pair {i,j} and its
/// complementary triple T.
struct SplitStatistics {
  ColorSet pair;
  ColorSet triple;
  /// g_{ij} = number of triangles of K(T).
  int pair_residue_count = 0;
  /// g_T = number of 1-simplices of K(Gamma) joining vertices i and j.
  int triple_residue_count = 0;
  /// Triangles of K(T) grouped by identical boundary: sizes of each group.
  std::vector<int> family_sizes;
  /// sum(family sizes) - number of families; a lower bound on beta2(V').
  int family_excess = 0;
  /// Edges of K(T) per label pair of T.
  std::vector<std::pair<ColorSet, int>> triple_edges;
  /// Bipartite graph with exactly two 1-simplices between i and j: the
  /// neighbourhood of K(i,j) is S^1 x B^3.
  bool neighbourhood_is_circle_times_ball = false;
};

SplitStatistics split_statistics(const ColoredGraph& g, Color i, Color j);

}  // namespace gemkit
