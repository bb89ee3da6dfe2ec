#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/complex.hpp"
#include "gemkit/genus.hpp"

namespace gemkit {

// ------------------------------------------------------------ classify

enum class ResidueVerdict { SphereLike, NonSphereClosed, Unverifiable };

std::string to_string(ResidueVerdict v);

/// Per-color verdicts on the residues Gamma_{c-hat} of a 5-colored graph.
///
/// SphereLike is a homology-level test only: every component of the residue
/// has the integral homology of S^3. Homology 3-spheres pass it too, which is
/// why `homology_level_only` is always set.
struct Classification {
  std::vector<ResidueVerdict> verdicts;
  /// One profile per residue component, per color.
  std::vector<std::vector<HomologyProfile>> residue_homology;
  ColorSet singular_colors;
  bool contracted = false;
  bool bipartite = false;
  bool homology_level_only = true;

  bool closed_candidate() const { return singular_colors.empty(); }
};

/// Requires a FullyRegular, connected graph with d >= 2.
Classification classify(const ColoredGraph& g, int workers = 1);

// ---------------------------------------------------------- identities

struct IdentityCheck {
  std::string name;  // "eq1", "eq2", "eq3"
  int j = -1;        // -1 for eq3
  Rational lhs;
  Rational rhs;

  bool holds() const { return lhs == rhs; }
};

/// Evaluation of the component-count / genus identities of a 5-colored
/// crystallization. Genus values are taken along the cyclic order
/// (0,1,2,3,4), to which the j-1, j+1 index arithmetic refers; residue genera
/// use the induced order on each residue.
struct IdentityReport {
  bool singular_mode = false;
  /// relabeling[old] = new color; identity unless a singular color was moved to 4.
  std::vector<Color> relabeling;
  Rational rho;
  std::vector<Rational> rho_hat;
  /// Minimum over all cyclic orders, and whether (0,1,2,3,4) attains it.
  Rational regular_genus;
  bool order_attains_minimum = false;
  long long euler = 0;
  std::vector<IdentityCheck> eq1;
  std::vector<IdentityCheck> eq2;
  IdentityCheck eq3;

  bool all_hold() const;
};

/// Closed case. Throws NotCrystallization (not a contracted, regular
/// 5-colored graph) or NotClosedCandidate.
IdentityReport verify_identities_closed(const ColoredGraph& g);

/// Singular case: at most one singular color. When it is not 4 and
/// `auto_relabel` is set, colors c and 4 are swapped and recorded; otherwise
/// SingularColorNotFour is thrown.
IdentityReport verify_identities_singular(const ColoredGraph& g, bool auto_relabel = true);

// ---------------------------------------------------------- semi-simple

struct SemiSimpleMode {
  enum class Kind { Closed, Boundary };
  Kind kind = Kind::Closed;
  int m = 0;
  int m_prime = 0;

  static SemiSimpleMode closed(int m) { return {Kind::Closed, m, m}; }
  static SemiSimpleMode boundary(int m, int m_prime) { return {Kind::Boundary, m, m_prime}; }
  std::string to_string() const;
};

struct CountCheck {
  ColorSet colors;
  int observed = 0;
  int expected = 0;

  bool ok() const { return observed == expected; }
};

struct SemiSimpleVerdict {
  SemiSimpleMode mode;
  /// One row per color triple.
  std::vector<CountCheck> triples;
  /// Closed mode: number of 1-simplices of K(Gamma) joining each pair of
  /// vertices, expected m+1.
  std::vector<CountCheck> edge_multiplicities;
  bool pass = false;

  std::vector<CountCheck> failures() const;
};

SemiSimpleVerdict check_semisimple(const ColoredGraph& g, SemiSimpleMode mode);

// -------------------------------------------------- lemma-level relations

enum class Pi1Hat { Unknown, Trivial, InfiniteCyclic };

/// Topological data the graph cannot provide on its own: the ranks of the
/// fundamental groups are declared, Betti numbers come from K(Gamma).
struct BettiContext {
  HomologyProfile profile;
  int m = 0;
  std::optional<int> m_prime;
  /// Declared pi_1(M) = Z (boundary-mode table rows).
  bool pi1_is_z = false;
  Pi1Hat pi1_hat = Pi1Hat::Unknown;

  int beta1() const { return profile.betti.at(1); }
  int beta2() const { return profile.betti.at(2); }

  /// Throws NegativeRank, or RankBelowBetti when m (closed) or m' (boundary)
  /// is smaller than beta_1 of K(Gamma).
  static BettiContext closed(HomologyProfile profile, int m);
  static BettiContext boundary(HomologyProfile profile, int m, std::optional<int> m_prime);
};

struct RelationCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;

  bool holds() const { return lhs == rhs; }
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_hold() const;
};

/// g_{j-1,j+1} = 4m + beta2 - 2 beta1 + 1 for all j, chi = 2 + beta2 - 2 beta1,
/// and g_14 = beta2 + 3 when m = beta1 = 1. Requires a semi-simple (closed,
/// rank m) bipartite crystallization.
RelationReport lemma_gcount_closed(const ColoredGraph& g, const BettiContext& ctx);

/// Boundary-mode counterpart using m, m' and chi of the singular manifold;
/// with pi1_is_z declared, also the table rows 3 + beta2 / 2 + beta2.
RelationReport lemma_gcount_boundary(const ColoredGraph& g, const BettiContext& ctx);

// ------------------------------------------------ V' splitting constraints

enum class VPrimeCase { TwoOneHandles, OneOneHandle, Impossible, OutOfRange };

std::string to_string(VPrimeCase c);

struct VPrimeReport {
  int beta2_m = 0;
  int beta1_vprime = 0;
  int beta2_vprime = 0;
  /// beta2(V') - beta2(M) - beta1(V') + 1
  long long equation_residual = 0;
  bool equation_holds = false;
  bool bound_holds = false;
  VPrimeCase which = VPrimeCase::OutOfRange;
  /// EquationViolated / BoundViolated / ImpossibleCase, in that order.
  std::vector<std::string> violations;

  bool consistent() const { return violations.empty(); }
};

VPrimeReport v_prime_constraints(int beta2_m, int beta1_vprime, int beta2_vprime);

inline VPrimeReport v_prime_constraints(const BettiContext& ctx, int beta1_vprime, int beta2_vprime) {
  return v_prime_constraints(ctx.beta2(), beta1_vprime, beta2_vprime);
}

}  // namespace gemkit
