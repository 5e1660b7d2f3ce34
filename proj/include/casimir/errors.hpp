#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Raised when a depolarization factor leaves (0, 1) and a downstream
/// operation needs a real surface-mode frequency sqrt(n_s)*omega_p.
class BreakdownError : public std::domain_error {
 public:
  BreakdownError(const std::string& what, double offending_n)
      : std::domain_error(what), offending_n_(offending_n) {}

  double offending_n() const { return offending_n_; }

 private:
  double offending_n_;
};

/// Raised when adaptive quadrature exhausts its subdivision budget with the
/// error estimate still above the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved, double requested)
      : std::runtime_error(what), achieved_(achieved), requested_(requested) {}

  double achieved() const { return achieved_; }
  double requested() const { return requested_; }

 private:
  double achieved_;
  double requested_;
};

}  // namespace casimir
