#ifndef BELLINV_ERRORS_HPP
#define BELLINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bellinv {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands carry different truncation orders.
struct OrderMismatch : Error {
  explicit OrderMismatch(const std::string& msg) : Error(msg) {}
};

/// A stated precondition does not hold (invalid range, wrong constant term, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A parameter choice makes a formula singular at a specific index.
/// `index` names the offending sequence position.
struct SingularParameter : Error {
  long index;
  SingularParameter(const std::string& msg, long idx) : Error(msg), index(idx) {}
};

/// Malformed textual/JSON input.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace bellinv

#endif  // BELLINV_ERRORS_HPP
