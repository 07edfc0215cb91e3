#pragma once

#include <stdexcept>
#include <string>

#include "respole/types.hpp"

namespace respole {

enum class Errc {
  invalid_argument,
  configuration,
  orientation,
  singular_system,
  solver_failure,
  no_pole_enclosed,
  multiple_poles,
  not_a_pole,
  no_convergence,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Root-finder failure; carries the best iterate seen so far.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, Complex best, double best_value)
      : Error(Errc::no_convergence, what), best_(best), best_value_(best_value) {}
  Complex best_iterate() const { return best_; }
  double best_value() const { return best_value_; }

 private:
  Complex best_;
  double best_value_;
};

}  // namespace respole
