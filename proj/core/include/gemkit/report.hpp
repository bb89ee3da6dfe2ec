#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gemkit/analysis.hpp"
#include "gemkit/complex.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/handles.hpp"
#include "gemkit/io.hpp"

namespace gemkit {

/// Sections a report can carry, as bit flags. The graph identity,
/// regularity, contractedness, bipartiteness and g-profile are always present.
namespace sections {
inline constexpr unsigned kHomology = 1u << 0;
inline constexpr unsigned kGenus = 1u << 1;
inline constexpr unsigned kClassification = 1u << 2;
inline constexpr unsigned kIdentities = 1u << 3;
inline constexpr unsigned kSemiSimple = 1u << 4;
inline constexpr unsigned kLemma = 1u << 5;
inline constexpr unsigned kDecomposition = 1u << 6;
inline constexpr unsigned kAll = (1u << 7) - 1;
}  // namespace sections

struct ReportRequest {
  unsigned section_mask = sections::kAll;
  /// Override the document metadata.
  std::optional<int> m;
  std::optional<int> m_prime;
  /// Semi-simple and lemma mode; inferred from the classification when unset.
  std::optional<SemiSimpleMode::Kind> mode;
  int workers = 1;
};

/// A library precondition that stopped one section from being evaluated.
struct SectionError {
  std::string code;
  std::string message;
};

struct Certificate {
  std::string name;
  bool pass = false;
};

/// Outcome of a section that may be skipped: either a value, a precondition
/// error, or a reason it does not apply.
template <class T>
struct Outcome {
  std::optional<T> value;
  std::optional<SectionError> error;
  std::optional<std::string> not_applicable;

  bool requested() const { return value || error || not_applicable; }
};

struct AnalysisReport {
  std::string name;
  std::string hash;
  int dimension = 0;
  int vertices = 0;
  int edge_count = 0;
  RegularityClass regularity;
  bool contracted = false;
  bool bipartite = false;
  bool connected = false;
  /// g_B for |B| = 2 and |B| = 3, ordered lexicographically by colors.
  std::vector<std::pair<ColorSet, int>> g_pairs;
  std::vector<std::pair<ColorSet, int>> g_triples;

  std::optional<std::vector<int>> f_vector;
  std::optional<long long> euler;
  Outcome<HomologyProfile> homology;
  Outcome<GenusReport> genus;
  Outcome<Classification> classification;
  Outcome<IdentityReport> identities;
  Outcome<SemiSimpleVerdict> semisimple;
  Outcome<RelationReport> lemma;
  Outcome<DecompositionReport> decomposition;

  std::vector<Certificate> certificates;

  bool all_pass() const;
};

/// Evaluates the requested sections. Output is independent of `workers`.
AnalysisReport build_report(const GraphDocument& doc, const ReportRequest& request = {});

/// Adds a certificate row; the report fails if any row fails.
void add_certificate(AnalysisReport& report, std::string name, bool pass);

/// Deterministic JSON: sorted keys, two-space indent, integers and
/// {"den": b, "num": a} rationals only, trailing newline.
std::string to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

/// Stand-alone handle prediction output (no graph).
std::string to_json(const DecompositionReport& report, const std::vector<Certificate>& certificates);
std::string to_text(const DecompositionReport& report, const std::vector<Certificate>& certificates);

}  // namespace gemkit
