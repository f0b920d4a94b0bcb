#pragma once

#include <stdexcept>
#include <string>

namespace pancake {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two curves share infinitely many points (collinear overlap, identical circles).
struct OverlapError : Error {
  using Error::Error;
};

// Two positions along a curve could not be separated: either they coincide
// exactly (a tie, e.g. a triple point) or they differ by less than the minimum
// certification width.  `exact_tie` distinguishes the two; `i`, `j` index the
// offending entries in the caller's point list.
struct AmbiguousOrderError : Error {
  bool exact_tie;
  std::size_t i, j;
  AmbiguousOrderError(const std::string& msg, bool tie, std::size_t a, std::size_t b)
      : Error(msg), exact_tie(tie), i(a), j(b) {}
};

struct ValidationError : Error {
  std::string constraint;
  explicit ValidationError(const std::string& msg) : Error(msg), constraint(msg) {}
  ValidationError(const std::string& which, const std::string& msg)
      : Error(msg), constraint(which) {}
};

struct PerpendicularityError : ValidationError {
  explicit PerpendicularityError(const std::string& msg)
      : ValidationError("perpendicularity", msg) {}
};

struct UnknownKindError : Error {
  using Error::Error;
};

struct DegenerateInputError : Error {
  using Error::Error;
};

struct DisconnectedInputError : Error {
  int components;
  DisconnectedInputError(const std::string& msg, int c) : Error(msg), components(c) {}
};

// The face counter's certified refinement hit its iteration cap without
// reproducing the exact crossing structure.
struct ResolutionExceededError : Error {
  using Error::Error;
};

struct NotStoredError : Error {
  using Error::Error;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

struct ConfigParseError : Error {
  using Error::Error;
};

}  // namespace pancake
