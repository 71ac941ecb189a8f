#pragma once

#include <stdexcept>
#include <string>

namespace gicpc {

// Argument outside the mathematical domain of a function (negative SNR,
// LambertW below the branch point, fraction outside [0,1]).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A burst fraction / processing cost combination that leaves a negative
// signaling power, or a profile outside its constraint set.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// A scheme requested outside the gain regime it is derived for.
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

class NoFeasiblePointError : public std::runtime_error {
 public:
  explicit NoFeasiblePointError(const std::string& what) : std::runtime_error(what) {}
};

// A computed result broke a property that must hold by construction, such as
// a scheme rate above the interference-free upper bound.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gicpc
