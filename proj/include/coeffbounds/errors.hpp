#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace coeffbounds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientOrderError : public Error {
 public:
  using Error::Error;
};

class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the set on which the operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Realness hypothesis on zeta1 violated.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Boundary configuration where an identity degenerates to 0 = 0.
class DegenerateCaseError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::vector<double> point)
      : Error(what), point_(std::move(point)) {}

  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace coeffbounds
