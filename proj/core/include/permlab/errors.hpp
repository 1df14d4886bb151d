#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

// Caller passed something malformed (bad flags, bad parameters, bad file).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Arguments are well-formed but outside the mathematical domain of the
// operation (e.g. a primitive root modulo 8).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Input exceeds a table or enumeration limit.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// A construction produced output that fails its own postcondition.
class PostconditionError : public std::logic_error {
 public:
  explicit PostconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace permlab
