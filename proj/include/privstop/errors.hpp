#pragma once

#include <stdexcept>
#include <string>

namespace privstop {

// A caller-supplied value is outside its documented domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An input is within its domain but exceeds an enumeration guard
// (state-space searches and exhaustive audits are capped by design).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An API precondition that is not a plain value range was violated,
// e.g. handing a randomized policy to an exact enumerator.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace privstop
