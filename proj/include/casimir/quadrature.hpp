#pragma once

#include <functional>
#include <span>

namespace casimir {

struct QuadOutcome {
  double value = 0.0;
  double abs_error = 0.0;
  int panels = 0;  // panel evaluations performed (initial + splits)
};

/// Adaptive 7-15 Gauss-Kronrod integration over the union of the panels
/// defined by the ascending breakpoint list (at least two entries). Panels
/// are bisected worst-error-first until the summed error estimate drops to
/// rel_tol * |integral|. Throws ConvergenceError if max_subdivisions splits
/// are exhausted first, std::invalid_argument for a bad breakpoint list.
QuadOutcome integrate_adaptive(const std::function<double(double)>& f,
                               std::span<const double> breakpoints,
                               double rel_tol, int max_subdivisions);

struct TailEstimate {
  double value = 0.0;  // integral of the fitted model over [cutoff, inf)
  double error = 0.0;  // residual-based bound
  double c2 = 0.0;     // leading coefficient of c2/w^2
  double c4 = 0.0;     // next-order coefficient of c4/w^4
};

/// Estimate the truncated tail of an integrand that decays like 1/w^2:
/// least-squares fit of f(w) w^2 = c2 + c4/w^2 over the last decade
/// [cutoff/10, cutoff], integrated analytically past the cutoff.
TailEstimate inverse_square_tail(const std::function<double(double)>& f,
                                 double cutoff);

}  // namespace casimir
