#include "gemkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gemkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::NotFullyRegular: return "NotFullyRegular";
    case ErrorCode::OddVertexCount: return "OddVertexCount";
    case ErrorCode::NotRegularEnough: return "NotRegularEnough";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::DisconnectedResidue: return "DisconnectedResidue";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotCrystallization: return "NotCrystallization";
    case ErrorCode::NotClosedCandidate: return "NotClosedCandidate";
    case ErrorCode::MultipleSingularColors: return "MultipleSingularColors";
    case ErrorCode::SingularColorNotFour: return "SingularColorNotFour";
    case ErrorCode::NegativeRank: return "NegativeRank";
    case ErrorCode::RankBelowBetti: return "RankBelowBetti";
    case ErrorCode::NotSemiSimple: return "NotSemiSimple";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::MissingContext: return "MissingContext";
    case ErrorCode::NegativeBetti: return "NegativeBetti";
    case ErrorCode::BadPair: return "BadPair";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

std::string ValidationIssue::message() const {
  std::ostringstream os;
  switch (kind) {
    case IssueKind::BadDimension: os << "BadDimension"; break;
    case IssueKind::BadVertexCount: os << "BadVertexCount"; break;
    case IssueKind::BadVertexId: os << "BadVertexId(" << vertex << ")"; break;
    case IssueKind::BadColor: os << "BadColor(" << color << ")"; break;
    case IssueKind::LoopEdge: os << "LoopEdge(" << vertex << ", " << color << ")"; break;
    case IssueKind::DuplicateColorAtVertex:
      os << "DuplicateColorAtVertex(" << vertex << ", " << color << ")";
      break;
    case IssueKind::MissingColor: os << "MissingColor(" << color << ")"; break;
  }
  return os.str();
}

namespace {

std::string join_issues(const std::vector<ValidationIssue>& issues) {
  std::string out = "invalid colored graph:";
  for (const auto& issue : issues) out += " " + issue.message() + ";";
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : Error(ErrorCode::Validation, join_issues(issues)), issues_(std::move(issues)) {}

bool ValidationError::has(IssueKind kind) const noexcept {
  return std::any_of(issues_.begin(), issues_.end(),
                     [kind](const ValidationIssue& i) { return i.kind == kind; });
}

}  // namespace gemkit
