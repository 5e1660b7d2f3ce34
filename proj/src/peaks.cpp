#include "casimir/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace casimir {

std::vector<Peak> find_peaks(std::span<const double> xs,
                             std::span<const double> ys,
                             double prominence_frac) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("find_peaks: xs and ys must have equal length");
  }
  const std::size_t n = ys.size();
  std::vector<Peak> peaks;
  if (n < 3) return peaks;

  std::vector<double> sm(n);
  sm[0] = (2.0 * ys[0] + ys[1]) / 3.0;
  sm[n - 1] = (ys[n - 2] + 2.0 * ys[n - 1]) / 3.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    sm[i] = (ys[i - 1] + ys[i] + ys[i + 1]) / 3.0;
  }

  double scale = 0.0;
  for (double y : ys) scale = std::max(scale, std::abs(y));
  const double min_prominence = prominence_frac * scale;

  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(sm[i] > sm[i - 1] && sm[i] > sm[i + 1])) continue;

    // Prominence: lowest point on the way to higher ground on each side
    // (or to the boundary), measured on the smoothed signal.
    double left_min = sm[i];
    for (std::size_t j = i; j-- > 0;) {
      left_min = std::min(left_min, sm[j]);
      if (sm[j] > sm[i]) break;
    }
    double right_min = sm[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      right_min = std::min(right_min, sm[j]);
      if (sm[j] > sm[i]) break;
    }
    const double prominence = sm[i] - std::max(left_min, right_min);
    if (prominence < min_prominence) continue;

    peaks.push_back(Peak{i, xs[i], ys[i], prominence});
  }
  return peaks;
}

}  // namespace casimir
