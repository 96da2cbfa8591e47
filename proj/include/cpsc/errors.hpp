#pragma once

#include <stdexcept>
#include <string>

namespace cpsc {

/// An iterative routine exhausted its iteration budget before reaching
/// its tolerance.  Carries the last residual seen.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double residual, int iterations)
      : std::runtime_error(msg), residual_(residual), iterations_(iterations) {}

  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

/// A matrix handed to the balancer had a row with no positive entry
/// (an isolated graph node).
class DegenerateRowError : public std::invalid_argument {
 public:
  DegenerateRowError(const std::string& msg, long row)
      : std::invalid_argument(msg), row_(row) {}

  long row() const { return row_; }

 private:
  long row_;
};

}  // namespace cpsc
