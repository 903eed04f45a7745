#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toricseq {

enum class ErrorCode {
  Overflow,
  InvalidFan,
  SurfaceMismatch,
  NotContractible,
  RankTooLow,
  EvenTerminalHirzebruch,
  InvalidPath,
  InvalidBasis,
  InternalInconsistency,
  BadIntersection,
  BadCanonicalSum,
  BadLength,
  NotDeaugmentable,
  Unclassifiable,
  NotHirzebruch,
  RankOutOfRange,
  SizeCapExceeded,
  NotALineBundle,
  NotAMinusTwoCurve,
  NotExceptionalInput,
  NotOrthogonal,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace toricseq
