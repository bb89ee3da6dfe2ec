#include "gemkit/analysis.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "gemkit/errors.hpp"

namespace gemkit {

std::string to_string(ResidueVerdict v) {
  switch (v) {
    case ResidueVerdict::SphereLike: return "SphereLike";
    case ResidueVerdict::NonSphereClosed: return "NonSphereClosed";
    case ResidueVerdict::Unverifiable: return "Unverifiable";
  }
  return "Unverifiable";
}

namespace {

bool sphere_homology(const HomologyProfile& h, int dim) {
  if (static_cast<int>(h.betti.size()) != dim + 1 || !h.torsion_free()) return false;
  for (int k = 0; k <= dim; ++k) {
    const int expected = (k == 0 || k == dim) ? 1 : 0;
    if (h.betti[k] != expected) return false;
  }
  return true;
}

struct ColorVerdict {
  ResidueVerdict verdict = ResidueVerdict::Unverifiable;
  std::vector<HomologyProfile> homology;
};

ColorVerdict classify_color(const ColoredGraph& g, Color c) {
  const ColorSet rest = ColorSet::all(g.dimension()).without(c);
  const int components = residue(g, rest).count();
  ColorVerdict out;
  bool sphere = true;
  for (int comp = 0; comp < components; ++comp) {
    auto h = homology_of(residue_component_graph(g, rest, comp));
    sphere = sphere && sphere_homology(h, g.dimension() - 1);
    out.homology.push_back(std::move(h));
  }
  out.verdict = sphere ? ResidueVerdict::SphereLike : ResidueVerdict::NonSphereClosed;
  return out;
}

void require_crystallization(const ColoredGraph& g) {
  if (g.dimension() != 4)
    throw Error(ErrorCode::NotCrystallization, "expected a 5-colored graph (dimension 4)");
  if (regularity_class(g).kind != RegularityClass::Kind::FullyRegular)
    throw Error(ErrorCode::NotCrystallization, "graph is not 5-regular");
  if (!is_contracted(g)) throw Error(ErrorCode::NotCrystallization, "graph is not contracted");
}

Color mod5(int x) { return ((x % 5) + 5) % 5; }

}  // namespace

Classification classify(const ColoredGraph& g, int workers) {
  if (g.dimension() < 2) throw Error(ErrorCode::DimensionOutOfRange, "classify needs d >= 2");
  if (regularity_class(g).kind != RegularityClass::Kind::FullyRegular)
    throw Error(ErrorCode::NotFullyRegular, "classify needs a fully regular graph");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");

  const int colors = g.color_count();
  std::vector<ColorVerdict> per_color(colors);
  if (workers <= 1) {
    for (Color c = 0; c < colors; ++c) per_color[c] = classify_color(g, c);
  } else {
    std::vector<std::future<ColorVerdict>> jobs;
    for (Color c = 0; c < colors; ++c) jobs.push_back(std::async(std::launch::async, classify_color, std::cref(g), c));
    for (Color c = 0; c < colors; ++c) per_color[c] = jobs[c].get();
  }

  Classification out;
  for (Color c = 0; c < colors; ++c) {
    out.verdicts.push_back(per_color[c].verdict);
    out.residue_homology.push_back(std::move(per_color[c].homology));
    if (per_color[c].verdict == ResidueVerdict::NonSphereClosed) out.singular_colors = out.singular_colors.with(c);
  }
  out.contracted = is_contracted(g);
  out.bipartite = is_bipartite(g);
  return out;
}

// ------------------------------------------------------------ identities

bool IdentityReport::all_hold() const {
  auto ok = [](const IdentityCheck& c) { return c.holds(); };
  return std::all_of(eq1.begin(), eq1.end(), ok) && std::all_of(eq2.begin(), eq2.end(), ok) && eq3.holds();
}

namespace {

IdentityReport evaluate_identities(const ColoredGraph& g) {
  const auto eps = CyclicPermutation::identity(4);
  const auto profile = g_profile(g);
  IdentityReport r;
  r.relabeling = {0, 1, 2, 3, 4};
  r.rho = rho_epsilon(g, eps);
  for (Color j = 0; j < 5; ++j) r.rho_hat.push_back(rho_epsilon(residue_graph(g, j), eps.without(j)));
  r.regular_genus = regular_genus(profile, g.vertex_count()).minimum;
  r.order_attains_minimum = (r.rho == r.regular_genus);
  r.euler = euler_characteristic(build_complex(g));

  for (int j = 0; j < 5; ++j) {
    const Color prev = mod5(j - 1);
    const Color next = mod5(j + 1);
    r.eq1.push_back({"eq1", j, Rational(profile.count({prev, next})),
                     Rational(profile.count({prev, j, next})) + r.rho - r.rho_hat[j]});
    const ColorSet triple = ColorSet::all(4).without(prev).without(next);
    r.eq2.push_back({"eq2", j, Rational(profile.count(triple)),
                     Rational(1) + r.rho - r.rho_hat[prev] - r.rho_hat[next]});
  }
  const Rational hat_sum = std::accumulate(r.rho_hat.begin(), r.rho_hat.end(), Rational(0));
  r.eq3 = {"eq3", -1, Rational(r.euler), Rational(2) - Rational(2) * r.rho + hat_sum};
  return r;
}

}  // namespace

IdentityReport verify_identities_closed(const ColoredGraph& g) {
  require_crystallization(g);
  const auto cls = classify(g);
  if (!cls.closed_candidate())
    throw Error(ErrorCode::NotClosedCandidate,
                "residues of colors " + cls.singular_colors.to_string() + " are not homology spheres");
  return evaluate_identities(g);
}

IdentityReport verify_identities_singular(const ColoredGraph& g, bool auto_relabel) {
  require_crystallization(g);
  const auto cls = classify(g);
  if (cls.singular_colors.size() > 1)
    throw Error(ErrorCode::MultipleSingularColors,
                "singular colors " + cls.singular_colors.to_string() + "; at most one is allowed");
  if (cls.singular_colors.empty()) return evaluate_identities(g);

  const Color c = cls.singular_colors.colors().front();
  std::vector<Color> mapping{0, 1, 2, 3, 4};
  if (c != 4) {
    if (!auto_relabel)
      throw Error(ErrorCode::SingularColorNotFour, "singular color is " + std::to_string(c) + ", not 4");
    std::swap(mapping[c], mapping[4]);
  }
  auto report = evaluate_identities(relabel_colors(g, mapping));
  report.singular_mode = true;
  report.relabeling = mapping;
  return report;
}

// ----------------------------------------------------------- semi-simple

std::string SemiSimpleMode::to_string() const {
  if (kind == Kind::Closed) return "closed(m=" + std::to_string(m) + ")";
  return "boundary(m=" + std::to_string(m) + ",m'=" + std::to_string(m_prime) + ")";
}

std::vector<CountCheck> SemiSimpleVerdict::failures() const {
  std::vector<CountCheck> out;
  for (const auto& t : triples)
    if (!t.ok()) out.push_back(t);
  for (const auto& e : edge_multiplicities)
    if (!e.ok()) out.push_back(e);
  return out;
}

SemiSimpleVerdict check_semisimple(const ColoredGraph& g, SemiSimpleMode mode) {
  if (mode.m < 0 || mode.m_prime < 0) throw Error(ErrorCode::NegativeRank, "ranks must be non-negative");
  require_crystallization(g);

  const auto profile = g_profile(g);
  SemiSimpleVerdict v;
  v.mode = mode;
  const ColorSet inner = ColorSet::all(3);
  for (std::uint32_t mask = 1; mask < 32; ++mask) {
    const ColorSet triple(mask);
    if (triple.size() != 3) continue;
    int expected = mode.m + 1;
    if (mode.kind == SemiSimpleMode::Kind::Boundary && triple.is_subset_of(inner)) expected = mode.m_prime + 1;
    v.triples.push_back({triple, profile.count(triple), expected});
  }
  if (mode.kind == SemiSimpleMode::Kind::Closed) {
    const auto cx = build_complex(g);
    for (std::uint32_t mask = 1; mask < 32; ++mask) {
      const ColorSet pair(mask);
      if (pair.size() != 2) continue;
      v.edge_multiplicities.push_back({pair, cx.count_labeled(pair), mode.m + 1});
    }
  }
  v.pass = v.failures().empty();
  return v;
}

// ----------------------------------------------------------- lemma checks

BettiContext BettiContext::closed(HomologyProfile profile, int m) {
  if (m < 0) throw Error(ErrorCode::NegativeRank, "rank m must be non-negative");
  BettiContext ctx;
  ctx.profile = std::move(profile);
  ctx.m = m;
  if (ctx.beta1() > m)
    throw Error(ErrorCode::RankBelowBetti, "m = " + std::to_string(m) + " is below beta1 = " + std::to_string(ctx.beta1()));
  return ctx;
}

BettiContext BettiContext::boundary(HomologyProfile profile, int m, std::optional<int> m_prime) {
  if (m < 0 || (m_prime && *m_prime < 0)) throw Error(ErrorCode::NegativeRank, "ranks must be non-negative");
  BettiContext ctx;
  ctx.profile = std::move(profile);
  ctx.m = m;
  ctx.m_prime = m_prime;
  // K(Gamma) is the singular manifold, whose pi_1 has rank m'.
  if (m_prime && ctx.beta1() > *m_prime)
    throw Error(ErrorCode::RankBelowBetti,
                "m' = " + std::to_string(*m_prime) + " is below beta1 = " + std::to_string(ctx.beta1()));
  return ctx;
}

bool RelationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds(); });
}

RelationReport lemma_gcount_closed(const ColoredGraph& g, const BettiContext& ctx) {
  if (!check_semisimple(g, SemiSimpleMode::closed(ctx.m)).pass)
    throw Error(ErrorCode::NotSemiSimple, "graph is not semi-simple with m = " + std::to_string(ctx.m));
  if (!is_bipartite(g)) throw Error(ErrorCode::NotBipartite, "graph is not bipartite");

  const auto profile = g_profile(g);
  const long long b1 = ctx.beta1();
  const long long b2 = ctx.beta2();
  RelationReport r;
  for (int j = 0; j < 5; ++j) {
    const Color prev = mod5(j - 1);
    const Color next = mod5(j + 1);
    r.checks.push_back({"g" + std::to_string(std::min(prev, next)) + std::to_string(std::max(prev, next)),
                        profile.count({prev, next}), 4LL * ctx.m + b2 - 2 * b1 + 1});
  }
  const long long chi = euler_characteristic(build_complex(g));
  r.checks.push_back({"euler", chi, 2 + b2 - 2 * b1});
  if (ctx.m == 1 && b1 == 1) r.checks.push_back({"g14_pi1_z", profile.count({1, 4}), b2 + 3});

  // Genus relations behind the count formula; integral because g is bipartite.
  const auto eps = CyclicPermutation::identity(4);
  const Rational rho = rho_epsilon(g, eps);
  std::vector<Rational> hat;
  for (Color j = 0; j < 5; ++j) hat.push_back(rho_epsilon(residue_graph(g, j), eps.without(j)));
  for (Color j = 1; j < 5; ++j)
    r.checks.push_back({"rho_hat" + std::to_string(j) + "_eq_rho_hat0", hat[j].numerator(), hat[0].numerator()});
  r.checks.push_back({"rho_eq_m_plus_2rho_hat0", rho.numerator(), ctx.m + 2 * hat[0].numerator()});
  return r;
}

RelationReport lemma_gcount_boundary(const ColoredGraph& g, const BettiContext& ctx) {
  if (!ctx.m_prime) throw Error(ErrorCode::MissingContext, "boundary relations need m'");
  const int m = ctx.m;
  const int mp = *ctx.m_prime;
  if (ctx.pi1_is_z) {
    if (m != 1) throw Error(ErrorCode::MissingContext, "pi_1(M) = Z declared but m != 1");
    if (ctx.pi1_hat == Pi1Hat::Unknown)
      throw Error(ErrorCode::MissingContext, "the table rows need pi_1 of the singular manifold (trivial or Z)");
    const int declared = ctx.pi1_hat == Pi1Hat::InfiniteCyclic ? 1 : 0;
    if (mp != declared || ctx.beta1() != mp)
      throw Error(ErrorCode::MissingContext, "m' and beta1 of K(Gamma) disagree with the declared pi_1");
  }
  if (!check_semisimple(g, SemiSimpleMode::boundary(m, mp)).pass)
    throw Error(ErrorCode::NotSemiSimple,
                "graph is not semi-simple in boundary mode with m = " + std::to_string(m) + ", m' = " + std::to_string(mp));

  const auto profile = g_profile(g);
  const long long chi = euler_characteristic(build_complex(g));
  const long long b2 = ctx.beta2();
  RelationReport r;
  for (int j = 0; j < 5; ++j) {
    const Color prev = mod5(j - 1);
    const Color next = mod5(j + 1);
    const bool touches_four = (prev == 4 || next == 4);
    const std::string name = "g" + std::to_string(std::min(prev, next)) + std::to_string(std::max(prev, next));
    const long long observed = profile.count({prev, next});
    const long long formula = touches_four ? 3LL * m + mp + chi - 1 : 2LL * m + 2LL * mp + chi - 1;
    r.checks.push_back({name, observed, formula});
    if (ctx.pi1_is_z) {
      const bool three = ctx.pi1_hat == Pi1Hat::InfiniteCyclic || touches_four;
      r.checks.push_back({name + "_table", observed, (three ? 3 : 2) + b2});
    }
  }
  return r;
}

// ------------------------------------------------------------------- V'

std::string to_string(VPrimeCase c) {
  switch (c) {
    case VPrimeCase::TwoOneHandles: return "decomposition (1)";
    case VPrimeCase::OneOneHandle: return "decomposition (2)";
    case VPrimeCase::Impossible: return "impossible";
    case VPrimeCase::OutOfRange: return "out of range";
  }
  return "out of range";
}

VPrimeReport v_prime_constraints(int beta2_m, int beta1_vprime, int beta2_vprime) {
  VPrimeReport r;
  r.beta2_m = beta2_m;
  r.beta1_vprime = beta1_vprime;
  r.beta2_vprime = beta2_vprime;
  r.equation_residual = static_cast<long long>(beta2_vprime) - beta2_m - beta1_vprime + 1;
  r.equation_holds = r.equation_residual == 0;
  r.bound_holds = beta1_vprime >= 0 && beta1_vprime <= 2 && beta2_vprime >= 0 && beta2_m >= 0;
  switch (beta1_vprime) {
    case 2: r.which = VPrimeCase::TwoOneHandles; break;
    case 1: r.which = VPrimeCase::OneOneHandle; break;
    case 0: r.which = VPrimeCase::Impossible; break;
    default: r.which = VPrimeCase::OutOfRange; break;
  }
  if (!r.equation_holds) r.violations.push_back("EquationViolated");
  if (!r.bound_holds) r.violations.push_back("BoundViolated");
  if (r.which == VPrimeCase::Impossible) r.violations.push_back("ImpossibleCase");
  return r;
}

}  // namespace gemkit
