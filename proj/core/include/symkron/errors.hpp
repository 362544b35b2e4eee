#pragma once

#include <stdexcept>

namespace symkron {

/// Thrown when an argument lies outside an operation's documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a request exceeds a documented size ceiling.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an identity that must hold exactly fails; indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symkron
