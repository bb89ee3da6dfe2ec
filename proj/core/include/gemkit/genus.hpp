#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <boost/version.hpp>

#include "gemkit/colored_graph.hpp"

#if BOOST_VERSION < 107500
namespace boost {
// Under C++20 rewritten comparisons, boost::rational's mixed equality calls
// itself forever before 1.75. Exact-match overloads win overload resolution.
inline bool operator==(const rational<long long>& r, int i) { return r.denominator() == 1 && r.numerator() == i; }
inline bool operator==(const rational<long long>& r, long long i) {
  return r.denominator() == 1 && r.numerator() == i;
}
}  // namespace boost
#endif

namespace gemkit {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

/// A cyclic ordering of the colors {0..d}, up to rotation and reversal.
/// Canonical form: starts at 0 and order[1] < order[d].
class CyclicPermutation {
 public:
  /// Accepts any representative (any rotation, either direction).
  explicit CyclicPermutation(std::vector<Color> order);

  /// (0, 1, ..., d)
  static CyclicPermutation identity(int dimension);

  const std::vector<Color>& order() const { return order_; }
  int dimension() const { return static_cast<int>(order_.size()) - 1; }
  Color at(int i) const;  // index taken mod d+1

  /// The cyclic order induced on the remaining colors after deleting c,
  /// relabeled to 0..d-1 preserving the numeric order of colors.
  CyclicPermutation without(Color c) const;

  std::string to_string() const;

  friend auto operator<=>(const CyclicPermutation&, const CyclicPermutation&) = default;

 private:
  std::vector<Color> order_;
};

/// All d!/2 classes for d >= 2, canonical and lexicographically sorted.
std::vector<CyclicPermutation> cyclic_permutations(int dimension);

/// chi_eps = sum_i g_{eps_i eps_{i+1}} + (1 - d) p, with 2p vertices.
long long chi_epsilon(const ColoredGraph& g, const CyclicPermutation& eps);
long long chi_epsilon(const GProfile& profile, int vertex_count, const CyclicPermutation& eps);

/// 1 - chi_eps / 2
Rational rho_epsilon(const ColoredGraph& g, const CyclicPermutation& eps);

struct GenusRow {
  CyclicPermutation eps;
  long long chi = 0;
  Rational rho;
};

struct GenusReport {
  std::vector<GenusRow> table;
  Rational minimum;
  std::vector<CyclicPermutation> argmin;

  /// rho for a given order, looked up in the table.
  Rational rho_at(const CyclicPermutation& eps) const;
};

/// Sweep over every cyclic permutation; requires a FullyRegular graph with d >= 2.
GenusReport regular_genus(const ColoredGraph& g, int workers = 1);
GenusReport regular_genus(const GProfile& profile, int vertex_count);

/// Regular genus of the residue without color c (swept in dimension d-1).
Rational residue_genus(const ColoredGraph& g, Color c);

/// Euler characteristic V - E + F of the regular embedding for eps, with the
/// faces found by walking bicolored cycles directly on the graph.
long long face_trace_oracle(const ColoredGraph& g, const CyclicPermutation& eps);

}  // namespace gemkit
