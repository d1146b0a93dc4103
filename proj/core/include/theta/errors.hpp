#pragma once

#include <stdexcept>
#include <string>

namespace theta {

/// Argument outside an operation's domain (s = 0, malformed digits, bad config).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A series or product did not reach its tolerance within the allowed terms.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace theta
