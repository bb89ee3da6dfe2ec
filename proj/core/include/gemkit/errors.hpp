#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gemkit {

enum class ErrorCode {
  Validation,
  ColorOutOfRange,
  NotFullyRegular,
  OddVertexCount,
  NotRegularEnough,
  DimensionOutOfRange,
  DisconnectedResidue,
  NotConnected,
  NotCrystallization,
  NotClosedCandidate,
  MultipleSingularColors,
  SingularColorNotFour,
  NegativeRank,
  RankBelowBetti,
  NotSemiSimple,
  NotBipartite,
  MissingContext,
  NegativeBetti,
  BadPair,
  UnknownCatalogEntry,
  SyntaxError,
  SchemaError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library. Preconditions that the caller
/// can violate with well-formed input are reported here, never by assert.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class IssueKind {
  BadDimension,
  BadVertexCount,
  BadVertexId,
  BadColor,
  LoopEdge,
  DuplicateColorAtVertex,
  MissingColor,
};

struct ValidationIssue {
  IssueKind kind;
  int vertex = -1;
  int color = -1;

  std::string message() const;
  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

/// Raised by graph construction; carries every violated invariant, not just
/// the first one found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);

  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }
  bool has(IssueKind kind) const noexcept;

 private:
  std::vector<ValidationIssue> issues_;
};

}  // namespace gemkit
