#include "gemkit/complex.hpp"

#include <algorithm>
#include <map>

#include "gemkit/errors.hpp"

namespace gemkit {

std::vector<int> PseudoComplex::f_vector() const {
  std::vector<int> f;
  for (const auto& level : simplices_) f.push_back(static_cast<int>(level.size()));
  return f;
}

int PseudoComplex::count_labeled(ColorSet labels) const {
  const int k = labels.size() - 1;
  if (k < 0 || k > dimension_) return 0;
  return static_cast<int>(std::count_if(simplices_[k].begin(), simplices_[k].end(),
                                        [labels](const Simplex& s) { return s.labels == labels; }));
}

PseudoComplex build_complex(const ColoredGraph& g) {
  const auto reg = regularity_class(g);
  if (reg.kind == RegularityClass::Kind::Irregular)
    throw Error(ErrorCode::NotRegularEnough,
                "K(Gamma) needs a regular graph or one regular with respect to a color");

  const int d = g.dimension();
  const ColorSet all = ColorSet::all(d);

  // One residue partition per label set, shared by simplices and face lookups.
  std::map<ColorSet, ResiduePartition> partitions;
  auto partition_for = [&](ColorSet labels) -> const ResiduePartition& {
    auto it = partitions.find(labels);
    if (it == partitions.end())
      it = partitions.emplace(labels, residue(g, labels.complement_in(d))).first;
    return it->second;
  };

  PseudoComplex cx;
  cx.dimension_ = d;
  cx.simplices_.resize(d + 1);
  cx.faces_.resize(d + 1);
  // index_of[labels][residue_id] -> position in simplices_[k]
  std::map<ColorSet, std::vector<int>> index_of;

  for (int k = 0; k <= d; ++k) {
    for (std::uint32_t mask = 1; mask <= all.bits(); ++mask) {
      ColorSet labels(mask);
      if (labels.size() != k + 1) continue;
      const auto& part = partition_for(labels);
      auto& idx = index_of[labels];
      idx.resize(part.count());
      for (int r = 0; r < part.count(); ++r) {
        idx[r] = static_cast<int>(cx.simplices_[k].size());
        cx.simplices_[k].push_back({labels, r});
      }
    }
  }

  for (int k = 1; k <= d; ++k) {
    auto& faces = cx.faces_[k];
    faces.reserve(cx.simplices_[k].size());
    for (const Simplex& s : cx.simplices_[k]) {
      const VertexId rep = partition_for(s.labels).components[s.residue_id].front();
      std::vector<int> f;
      for (Color b : s.labels.colors()) {
        const ColorSet face_labels = s.labels.without(b);
        const int face_residue = partition_for(face_labels).component_of[rep];
        f.push_back(index_of.at(face_labels)[face_residue]);
      }
      faces.push_back(std::move(f));
    }
  }
  return cx;
}

long long euler_characteristic(const PseudoComplex& k) {
  long long chi = 0;
  for (int i = 0; i <= k.dimension(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(k.count(i));
  return chi;
}

IntegerMatrix boundary_matrix(const PseudoComplex& k, int dim) {
  if (dim < 1 || dim > k.dimension())
    throw Error(ErrorCode::DimensionOutOfRange,
                "boundary map dimension " + std::to_string(dim) + " outside 1.." +
                    std::to_string(k.dimension()));
  IntegerMatrix m(k.count(dim - 1), k.count(dim));
  const auto& faces = k.faces(dim);
  for (std::size_t s = 0; s < faces.size(); ++s)
    for (std::size_t i = 0; i < faces[s].size(); ++i) m(faces[s][i], s) += (i % 2 == 0) ? 1 : -1;
  return m;
}

bool HomologyProfile::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

long long HomologyProfile::betti_euler() const {
  long long chi = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[i]);
  return chi;
}

HomologyProfile homology(const PseudoComplex& k) {
  const int d = k.dimension();
  // rank[i] = rank of boundary_i; rank[0] = rank[d+1] = 0.
  std::vector<int> rank(d + 2, 0);
  std::vector<std::vector<BigInt>> factors(d + 2);
  for (int i = 1; i <= d; ++i) {
    auto snf = smith_normal_form(boundary_matrix(k, i));
    rank[i] = snf.rank;
    factors[i] = std::move(snf.diagonal);
  }
  HomologyProfile h;
  h.betti.resize(d + 1);
  h.torsion.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    h.betti[i] = k.count(i) - rank[i] - rank[i + 1];
    for (const BigInt& x : factors[i + 1])
      if (x > 1) h.torsion[i].push_back(x);
  }
  return h;
}

HomologyProfile homology_of(const ColoredGraph& g) { return homology(build_complex(g)); }

}  // namespace gemkit
