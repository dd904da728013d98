#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latnorm {

/// Dense element index into a lattice's carrier.
using Elem = std::size_t;

enum class ErrorCode {
  NotAPoset,
  NotALattice,
  NoBounds,
  EmptySet,
  NotComparable,
  InvalidChain,
  SizeMismatch,
  NotIdempotent,
  NotALatticeInducedPoset,
  NotInImage,
  TopNotCJI,
  NotWeakFMapping,
  NotFMapping,
  InvalidDecomposition,
  MissingTopOp,
  MissingGapMap,
  InvalidIntervals,
  NotOrdinalSumShape,
  IndexOutOfRange,
  TooLarge,
  SyntaxError,
  UnknownElement,
  DuplicateEntry,
  ValidationError,
  UnknownFixture,
};

std::string_view to_string(ErrorCode code);

/// Library error. Carries a machine-readable code and, where one exists, the
/// offending element tuple.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Elem> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Elem> witness_;
};

/// Outcome of a single property test. A failed check always names the first
/// failing tuple in element-index order.
struct Check {
  bool holds = true;
  std::vector<Elem> witness;

  explicit operator bool() const noexcept { return holds; }

  static Check pass() { return {}; }
  static Check fail(std::vector<Elem> w) { return {false, std::move(w)}; }
};

}  // namespace latnorm
