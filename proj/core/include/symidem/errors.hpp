#pragma once

#include <stdexcept>
#include <string>

namespace symidem {

/// Bad index, mismatched kind/field/degree, or an out-of-range parameter.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// A computation would exceed a configured size bound (e.g. the dense oracle).
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition on the value of an argument does not hold.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace symidem
