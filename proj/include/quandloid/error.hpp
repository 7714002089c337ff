#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quandloid {

enum class ErrorCode {
  // quandle axioms / table access
  OutOfRangeEntry,
  IdempotenceViolation,
  ColumnNotBijective,
  DistributivityViolation,
  OutOfRange,
  InvalidArgument,
  SizeCapExceeded,
  // pointed structures
  ArityMismatch,
  LengthMismatch,
  PartitionBoundViolation,
  // diagrams and presentations
  SyntaxError,
  CrossingParity,
  RoleConflict,
  SignConflict,
  NotOpenComponent,
  UnknownArc,
  InvalidPosition,
  UnknownGenerator,
  // colorings
  UnassignedGenerator,
  UnknownPinnedGenerator,
  PinOutOfRange,
  CountOverflow,
  // i/o
  IoError,
};

/// Stable machine-readable name, e.g. "ColumnNotBijective".
std::string_view error_code_name(ErrorCode code);

/// Domain error. `witness` carries the integer witnesses named by the error
/// (e.g. the (x,y,z) triple of a distributivity failure, or (line, col) of a
/// syntax error); `subject` carries a token such as a crossing id.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::int64_t> witness = {},
        std::string subject = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        witness_(std::move(witness)),
        subject_(std::move(subject)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::vector<std::int64_t> witness_;
  std::string subject_;
};

}  // namespace quandloid
