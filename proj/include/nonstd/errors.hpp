#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonstd {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// lc_inv of a value whose term map is empty.
struct ZeroDivision : Error {
  ZeroDivision() : Error("division by zero") {}
  explicit ZeroDivision(const std::string& what) : Error(what) {}
};

// Interval division where the divisor cannot be certified away from zero.
struct DivisorStraddlesZero : Error {
  DivisorStraddlesZero() : Error("divisor interval straddles zero") {}
  explicit DivisorStraddlesZero(const std::string& what) : Error(what) {}
};

// standard_part of a value with negative leading exponent.
struct UnlimitedError : Error {
  UnlimitedError() : Error("standard part of an unlimited value") {}
};

// Expression undefined at the evaluation point or cell.
//
// `certain` distinguishes a certified failure (exact zero divisor, an
// argument enclosure entirely outside a function's domain) from an enclosure
// artifact (divisor interval that merely straddles zero). Refutations may
// only be built from certain failures.
struct DomainError : Error {
  DomainError(std::string node_in, std::string reason_in, bool certain_in)
      : Error(node_in + ": " + reason_in),
        node(std::move(node_in)),
        reason(std::move(reason_in)),
        certain(certain_in) {}
  std::string node;
  std::string reason;
  bool certain;
};

// exp/ln/sqrt at an unlimited argument, or ln at a non-positive standard part.
struct UnlimitedTranscendental : Error {
  explicit UnlimitedTranscendental(const std::string& what) : Error(what) {}
};

struct NotDifferentiable : Error {
  explicit NotDifferentiable(const std::string& what) : Error(what) {}
};

struct NotNonNegative : Error {
  explicit NotNonNegative(const std::string& what) : Error(what) {}
};

// Term map is empty but the truncation order is too coarse to classify the
// hidden part. Verdict producers map this to UNDECIDED.
struct TruncationError : Error {
  explicit TruncationError(const std::string& what) : Error(what) {}
};

// Requested enclosure width unattainable within the refinement cap.
struct EnclosureError : Error {
  explicit EnclosureError(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
  SyntaxError(std::size_t offset_in, std::string expected_in)
      : Error("syntax error at offset " + std::to_string(offset_in) +
              ": expected " + expected_in),
        offset(offset_in),
        expected(std::move(expected_in)) {}
  std::size_t offset;
  std::string expected;
};

}  // namespace nonstd
