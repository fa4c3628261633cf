#include "jcsum/envelope.hpp"

#include <cmath>
#include <deque>

#include "jcsum/error.hpp"

namespace jcsum {

double rabi_period(double alpha, double nu) {
  if (!(alpha > 0.0) || !(nu >= 0.0)) throw InvalidParameter("rabi_period: need alpha > 0, nu >= 0");
  return std::acos(-1.0) / (alpha * std::sqrt(1.0 + nu));
}

std::vector<double> sliding_max_abs(std::span<const double> t, std::span<const double> x, double window,
                                    double offset) {
  if (t.size() != x.size()) throw InvalidParameter("sliding_max_abs: size mismatch");
  if (!(window >= 0.0)) throw InvalidParameter("sliding_max_abs: window must be >= 0");
  const double half = 0.5 * window;
  const std::size_t n = t.size();
  std::vector<double> out(n);
  std::deque<std::size_t> q;  // indices with decreasing |x - offset|
  std::size_t hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (hi < n && t[hi] <= t[i] + half) {
      const double v = std::abs(x[hi] - offset);
      while (!q.empty() && std::abs(x[q.back()] - offset) <= v) q.pop_back();
      q.push_back(hi++);
    }
    while (t[q.front()] < t[i] - half) q.pop_front();
    out[i] = std::abs(x[q.front()] - offset);
  }
  return out;
}

std::size_t argmax(std::span<const double> x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] > x[best]) best = i;
  }
  return best;
}

}  // namespace jcsum
