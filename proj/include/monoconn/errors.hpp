#pragma once

#include <stdexcept>
#include <string>

namespace monoconn {

// A parameter, hypothesis or domain condition of an operation does not hold.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The requested order q is not a prime power, so no field of that order exists.
struct UnsupportedOrderError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// An invariant that a proof guarantees was observed to fail. Always a bug.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// The exhaustive oracle was asked for more work than its configured limit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionError(what);
}

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantError(what);
}

}  // namespace detail
}  // namespace monoconn
