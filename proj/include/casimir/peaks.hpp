#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace casimir {

struct Peak {
  std::size_t index = 0;  // index into the raw input arrays
  double x = 0.0;
  double y = 0.0;          // raw signal value at the peak
  double prominence = 0.0; // measured on the smoothed signal
};

/// Local maxima of the 3-point-smoothed signal whose prominence is at least
/// prominence_frac * max|ys|. Pass -ys to locate minima.
std::vector<Peak> find_peaks(std::span<const double> xs,
                             std::span<const double> ys,
                             double prominence_frac = 0.01);

}  // namespace casimir
