#pragma once

#include <stdexcept>
#include <string>

namespace cagames {

// Base of every engine error. `code()` is a stable machine-readable tag
// ("malformed-spec", "illegal-move", ...) that the CLI and the service
// surface verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(std::move(code)), detail_(std::move(detail)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

// Malformed input or a violated game/automaton precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured resource guard (cell budget, table cap) refused the request.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace cagames
