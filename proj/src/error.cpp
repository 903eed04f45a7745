#include "toricseq/error.hpp"

namespace toricseq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::RankTooLow: return "RankTooLow";
    case ErrorCode::EvenTerminalHirzebruch: return "EvenTerminalHirzebruch";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::InvalidBasis: return "InvalidBasis";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::BadIntersection: return "BadIntersection";
    case ErrorCode::BadCanonicalSum: return "BadCanonicalSum";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::NotDeaugmentable: return "NotDeaugmentable";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::NotHirzebruch: return "NotHirzebruch";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotALineBundle: return "NotALineBundle";
    case ErrorCode::NotAMinusTwoCurve: return "NotAMinusTwoCurve";
    case ErrorCode::NotExceptionalInput: return "NotExceptionalInput";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace toricseq
