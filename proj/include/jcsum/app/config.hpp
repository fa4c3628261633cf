#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jcsum/asymptotics.hpp"
#include "jcsum/params.hpp"
#include "jcsum/saddle.hpp"

namespace jcsum::app {

enum class Method { exact, contour, saddle, collapse, revival };
enum class OutputFormat { csv, json };
enum class StaticPartMode { exact, minus_nu, none };

Method parse_method(std::string_view name);
std::string_view to_string(Method m);
OutputFormat parse_format(std::string_view name);
std::string_view to_string(OutputFormat f);
SuperpositionPolicy parse_policy(std::string_view name);
std::string_view to_string(SuperpositionPolicy p);
StaticPartMode parse_static_part(std::string_view name);
std::string_view to_string(StaticPartMode m);
RevivalMode parse_revival_mode(std::string_view name);
std::string_view to_string(RevivalMode m);

struct RunConfig {
  double alpha = 5.0;
  double nu = 0.0;
  std::vector<Method> methods{Method::exact};
  /// Signed revival indices; empty selects every branch that can matter on
  /// the grid (saddle) or every revival inside it (revival).
  std::vector<int> branches;
  double t_start = 0.0;
  double t_stop = 200.0;
  int t_count = 2001;
  TimeUnit unit = TimeUnit::lambda_t;
  OutputFormat format = OutputFormat::csv;
  std::string out;  ///< empty writes to stdout
  SuperpositionPolicy policy = SuperpositionPolicy::sum;
  StaticPartMode static_part = StaticPartMode::exact;
  /// Unset: full at nu = 0, simplified otherwise.
  std::optional<RevivalMode> revival_mode;
  bool per_branch = false;

  ModelParams params() const;
  /// Time grid in the requested unit and in lambda*t.
  std::vector<double> grid() const;
  std::vector<double> grid_lambda_t() const;
  RevivalMode effective_revival_mode() const;

  /// Throws InvalidParameter with a readable message.
  void validate() const;
};

}  // namespace jcsum::app
