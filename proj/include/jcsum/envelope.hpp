#pragma once

#include <span>
#include <vector>

namespace jcsum {

/// Rabi period pi / (|alpha| (1+nu)^{1/2}) of the carrier oscillation.
double rabi_period(double alpha, double nu);

/// For each t_i, max |x_j - offset| over |t_j - t_i| <= window / 2.
/// t must be increasing.
std::vector<double> sliding_max_abs(std::span<const double> t, std::span<const double> x, double window,
                                    double offset = 0.0);

/// Index of the largest element (first one on ties).
std::size_t argmax(std::span<const double> x);

}  // namespace jcsum
