#pragma once

#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/smith.hpp"

namespace gemkit {

/// A k-simplex of K(Gamma): its vertex labels (k+1 colors) and the component
/// of the residue on the complementary colors that it corresponds to.
struct Simplex {
  ColorSet labels;
  /// Index into residue(g, labels.complement_in(d)).components.
  int residue_id = 0;

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// The colored simplicial cell complex of a colored graph, built dually from
/// residues. Distinct simplices may share their whole vertex set.
class PseudoComplex {
 public:
  int dimension() const { return dimension_; }

  const std::vector<Simplex>& simplices(int k) const { return simplices_.at(k); }
  int count(int k) const { return static_cast<int>(simplices_.at(k).size()); }
  /// Number of k-simplices per dimension, k = 0..d.
  std::vector<int> f_vector() const;

  /// faces(k)[s][i]: index of the (k-1)-face of simplex s obtained by dropping
  /// its i-th smallest label. Empty for k = 0.
  const std::vector<std::vector<int>>& faces(int k) const { return faces_.at(k); }

  /// Number of k-simplices whose label set is exactly `labels`.
  int count_labeled(ColorSet labels) const;

 private:
  friend PseudoComplex build_complex(const ColoredGraph& g);

  int dimension_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::vector<std::vector<int>>> faces_;
};

/// Requires a FullyRegular or RegularExceptColor graph.
PseudoComplex build_complex(const ColoredGraph& g);

long long euler_characteristic(const PseudoComplex& k);

/// Boundary map from dim-chains to (dim-1)-chains; rows index (dim-1)-simplices.
/// Sign of face i is (-1)^i with labels ordered increasingly.
IntegerMatrix boundary_matrix(const PseudoComplex& k, int dim);

struct HomologyProfile {
  std::vector<int> betti;
  /// torsion[k]: invariant factors > 1 of H_k, each dividing the next.
  std::vector<std::vector<BigInt>> torsion;

  bool torsion_free() const;
  long long betti_euler() const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology(const PseudoComplex& k);

/// Homology of the complex of g, a shorthand used throughout.
HomologyProfile homology_of(const ColoredGraph& g);

}  // namespace gemkit
