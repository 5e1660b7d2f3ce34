#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

// 7-15 Gauss-Kronrod nodes and weights on [-1, 1] (nonnegative abscissae).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  long seq = 0;  // insertion order, for deterministic tie-breaking
};

struct WorstFirst {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.seq > rhs.seq;
  }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b,
                     long seq) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (f1 + f2);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * half;
  p.error = std::abs((resk - resg) * half);
  p.seq = seq;
  return p;
}

}  // namespace

QuadOutcome integrate_adaptive(const std::function<double(double)>& f,
                               std::span<const double> breakpoints,
                               double rel_tol, int max_subdivisions) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("integrate_adaptive: need at least two breakpoints");
  }
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("integrate_adaptive: rel_tol must be > 0");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] >= breakpoints[i - 1])) {
      throw std::invalid_argument("integrate_adaptive: breakpoints must be ascending");
    }
  }

  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> active;
  long seq = 0;
  double total_value = 0.0;
  double active_error = 0.0;
  double frozen_error = 0.0;  // panels at minimum width keep their estimate
  int panels = 0;

  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i] == breakpoints[i - 1]) continue;
    Panel p = evaluate_panel(f, breakpoints[i - 1], breakpoints[i], seq++);
    total_value += p.value;
    active_error += p.error;
    active.push(p);
    ++panels;
  }

  int splits = 0;
  const auto tolerance = [&] { return rel_tol * std::abs(total_value); };
  while (active_error + frozen_error > tolerance() && !active.empty()) {
    if (splits >= max_subdivisions) {
      throw ConvergenceError(
          "integrate_adaptive: subdivision budget exhausted above tolerance",
          active_error + frozen_error, tolerance());
    }
    Panel worst = active.top();
    active.pop();
    active_error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.error == 0.0 || mid <= worst.a || mid >= worst.b) {
      frozen_error += worst.error;
      continue;
    }
    Panel left = evaluate_panel(f, worst.a, mid, seq++);
    Panel right = evaluate_panel(f, mid, worst.b, seq++);
    total_value += left.value + right.value - worst.value;
    active_error += left.error + right.error;
    active.push(left);
    active.push(right);
    panels += 2;
    ++splits;
  }

  const double total_error = std::max(active_error, 0.0) + frozen_error;
  if (total_error > tolerance()) {
    throw ConvergenceError(
        "integrate_adaptive: panels hit minimum width above tolerance",
        total_error, tolerance());
  }

  QuadOutcome out;
  out.value = total_value;
  out.abs_error = total_error;
  out.panels = panels;
  return out;
}

TailEstimate inverse_square_tail(const std::function<double(double)>& f,
                                 double cutoff) {
  if (!(cutoff > 0.0)) {
    throw std::invalid_argument("inverse_square_tail: cutoff must be > 0");
  }
  constexpr int kSamples = 12;

  // Least squares of f(w) w^2 = c2 + b t with t = (cutoff/w)^2 in [1, 100].
  double st = 0.0, stt = 0.0, sw = 0.0, swt = 0.0;
  double ts[kSamples];
  double ws[kSamples];
  for (int i = 0; i < kSamples; ++i) {
    const double frac = static_cast<double>(i) / (kSamples - 1);
    const double w = cutoff / 10.0 * std::pow(10.0, frac);
    const double t = (cutoff / w) * (cutoff / w);
    const double val = f(w) * w * w;
    ts[i] = t;
    ws[i] = val;
    st += t;
    stt += t * t;
    sw += val;
    swt += val * t;
  }
  const double det = kSamples * stt - st * st;
  const double c2 = (stt * sw - st * swt) / det;
  const double b = (kSamples * swt - st * sw) / det;
  const double c4 = b * cutoff * cutoff;

  double max_residual = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    max_residual = std::max(max_residual, std::abs(ws[i] - (c2 + b * ts[i])));
  }

  TailEstimate tail;
  tail.c2 = c2;
  tail.c4 = c4;
  tail.value = c2 / cutoff + c4 / (3.0 * cutoff * cutoff * cutoff);
  tail.error = max_residual / cutoff;
  return tail;
}

}  // namespace casimir
