#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qset {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A word refers to a generator outside the group's rank, or has a zero exponent.
class MalformedWord : public Error {
public:
  using Error::Error;
};

/// Elements from different groups (or an element foreign to the group) were combined.
class ContextMismatch : public Error {
public:
  using Error::Error;
};

/// Text could not be parsed; the message names the offending token.
class ParseError : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class UnsupportedSpec : public Error {
public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
  using Error::Error;
};

/// phi was applied to a vertex pair that is not an edge of the difference graph.
class NotAnEdge : public Error {
public:
  using Error::Error;
};

/// An identity the library asserts (e.g. a cardinality-preservation check) failed.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// An enumeration would exceed its evaluation budget. Carries the work done so far.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(const std::string& what, std::uint64_t examined,
                 std::uint32_t sizes_completed)
      : Error(what), examined_(examined), sizes_completed_(sizes_completed) {}

  std::uint64_t examined() const noexcept { return examined_; }
  /// Largest subset size whose stratum was fully scanned (0 if none).
  std::uint32_t sizes_completed() const noexcept { return sizes_completed_; }

private:
  std::uint64_t examined_;
  std::uint32_t sizes_completed_;
};

} // namespace qset
