// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace uavp {

// Exit codes reported by the command line tool. Usage errors from the flag
// parser use code 1, which is not represented here.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitValidation = 2,
  kExitEmptyRegion = 3,
  kExitDemandExceedsTable = 4,
  kExitIo = 5,
};

// Base of all domain errors. `kind()` is a stable machine-readable tag,
// `exit_code()` the process exit status the CLI maps this error to.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message, int exit_code)
      : std::runtime_error(kind + ": " + message),
        kind_(std::move(kind)),
        exit_code_(exit_code) {}

  [[nodiscard]] const std::string& kind() const noexcept { return kind_; }
  [[nodiscard]] int exit_code() const noexcept { return exit_code_; }

 private:
  std::string kind_;
  int exit_code_;
};

// Input file is not syntactically valid JSON or has wrongly typed fields.
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError", m, kExitValidation) {}
};

// A semantic invariant of the scenario is violated. The message names the
// first violated invariant.
struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error("ValidationError", m, kExitValidation) {}
};

// Footprint polygon cannot be triangulated (collinear or degenerate corners).
struct DegenerateFootprint : Error {
  explicit DegenerateFootprint(const std::string& m)
      : Error("DegenerateFootprint", m, kExitValidation) {}
};

// Link evaluation requested at zero transmitter/receiver separation.
struct ZeroDistance : Error {
  explicit ZeroDistance(const std::string& m) : Error("ZeroDistance", m, kExitValidation) {}
};

// A user demand exceeds the highest rate of the MCS table.
struct DemandExceedsTable : Error {
  explicit DemandExceedsTable(const std::string& m)
      : Error("DemandExceedsTable", m, kExitDemandExceedsTable) {}
};

// No grid point is covered by any coverage sphere.
struct EmptyRegion : Error {
  explicit EmptyRegion(const std::string& m) : Error("EmptyRegion", m, kExitEmptyRegion) {}
};

// Optimizer invoked with an empty candidate set.
struct EmptyCandidateSet : Error {
  explicit EmptyCandidateSet(const std::string& m)
      : Error("EmptyCandidateSet", m, kExitEmptyRegion) {}
};

// Exhaustive search would exceed its configured candidate cap.
struct CandidateCapExceeded : Error {
  explicit CandidateCapExceeded(const std::string& m)
      : Error("CandidateCapExceeded", m, kExitValidation) {}
};

// File system failure while reading or writing artifacts.
struct IoError : Error {
  explicit IoError(const std::string& m) : Error("IoError", m, kExitIo) {}
};

}  // namespace uavp
