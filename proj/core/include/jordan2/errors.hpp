#pragma once

#include <stdexcept>
#include <string>

namespace jordan2 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SingularMap : public Error {
 public:
  using Error::Error;
};

class NotJordan : public Error {
 public:
  using Error::Error;
};

/// An approximate decision quantity fell inside the tolerance band around
/// zero, so the branch cannot be decided.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

/// The unit system was consistent but underdetermined.
class AmbiguousUnit : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double final_residual, int iterations)
      : Error(what), final_residual_(final_residual), iterations_(iterations) {}

  double final_residual() const { return final_residual_; }
  int iterations() const { return iterations_; }

 private:
  double final_residual_;
  int iterations_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace jordan2
