#pragma once

#include <stdexcept>
#include <string>

namespace polymu {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invariant-violating input. `where()` names the offending
/// field (e.g. "root", "edges[3][1]") when one is known.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::string where = {})
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Two routes that must agree did not. Always an implementation bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap or step budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace polymu
