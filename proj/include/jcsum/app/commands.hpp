#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "jcsum/app/config.hpp"
#include "jcsum/app/table.hpp"

namespace jcsum::app {

/// Inversion values of several methods on one time grid (lambda*t).
struct InversionSeries {
  std::vector<double> time_grid;
  std::vector<std::pair<Method, std::vector<double>>> values;
  /// Saddle contribution per revival index.
  std::vector<std::pair<int, std::vector<double>>> per_branch;

  /// Checks alignment and that every stored value lies in [-1.1, 1.1].
  void validate() const;
};

/// Static part added to methods that omit it (contour at nu > 0 and the
/// asymptotic ones), per cfg.static_part.
double static_offset(const RunConfig& cfg);

InversionSeries compute_series(const RunConfig& cfg);

Table inversion_table(const RunConfig& cfg);
Table trajectory_table(const RunConfig& cfg);
Table times_table(const RunConfig& cfg);

/// Writes to cfg.out, or to `fallback` when cfg.out is empty.
void emit(const Table& t, const RunConfig& cfg, std::ostream& fallback);

int cmd_inversion(const RunConfig& cfg, std::ostream& out);
int cmd_trajectory(const RunConfig& cfg, std::ostream& out);
int cmd_times(const RunConfig& cfg, std::ostream& out);

}  // namespace jcsum::app
