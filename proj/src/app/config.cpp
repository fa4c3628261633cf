#include "jcsum/app/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jcsum/error.hpp"

namespace jcsum::app {

namespace {

template <class E, std::size_t N>
E parse_name(std::string_view name, const std::pair<std::string_view, E> (&table)[N], const char* what) {
  for (const auto& [key, value] : table) {
    if (key == name) return value;
  }
  std::string msg = std::string("unknown ") + what + " '" + std::string(name) + "' (expected";
  for (std::size_t i = 0; i < N; ++i) msg += (i ? ", " : " ") + std::string(table[i].first);
  throw InvalidParameter(msg + ")");
}

template <class E, std::size_t N>
std::string_view name_of(E value, const std::pair<std::string_view, E> (&table)[N]) {
  for (const auto& [key, v] : table) {
    if (v == value) return key;
  }
  return "?";
}

constexpr std::pair<std::string_view, Method> kMethods[] = {{"exact", Method::exact},
                                                            {"contour", Method::contour},
                                                            {"saddle", Method::saddle},
                                                            {"collapse", Method::collapse},
                                                            {"revival", Method::revival}};
constexpr std::pair<std::string_view, OutputFormat> kFormats[] = {{"csv", OutputFormat::csv},
                                                                  {"json", OutputFormat::json}};
constexpr std::pair<std::string_view, SuperpositionPolicy> kPolicies[] = {{"sum", SuperpositionPolicy::sum},
                                                                          {"max", SuperpositionPolicy::max}};
constexpr std::pair<std::string_view, StaticPartMode> kStatic[] = {{"exact", StaticPartMode::exact},
                                                                   {"minus-nu", StaticPartMode::minus_nu},
                                                                   {"none", StaticPartMode::none}};
constexpr std::pair<std::string_view, RevivalMode> kRevival[] = {{"full", RevivalMode::full},
                                                                 {"simplified", RevivalMode::simplified}};

}  // namespace

Method parse_method(std::string_view name) { return parse_name(name, kMethods, "method"); }
std::string_view to_string(Method m) { return name_of(m, kMethods); }
OutputFormat parse_format(std::string_view name) { return parse_name(name, kFormats, "format"); }
std::string_view to_string(OutputFormat f) { return name_of(f, kFormats); }
SuperpositionPolicy parse_policy(std::string_view name) { return parse_name(name, kPolicies, "policy"); }
std::string_view to_string(SuperpositionPolicy p) { return name_of(p, kPolicies); }
StaticPartMode parse_static_part(std::string_view name) { return parse_name(name, kStatic, "static-part mode"); }
std::string_view to_string(StaticPartMode m) { return name_of(m, kStatic); }
RevivalMode parse_revival_mode(std::string_view name) { return parse_name(name, kRevival, "revival mode"); }
std::string_view to_string(RevivalMode m) { return name_of(m, kRevival); }

ModelParams RunConfig::params() const { return ModelParams::from_nu(alpha, nu, unit); }

std::vector<double> RunConfig::grid() const {
  std::vector<double> g(static_cast<std::size_t>(t_count));
  const double h = (t_stop - t_start) / (t_count - 1);
  for (int i = 0; i < t_count; ++i) g[i] = t_start + h * i;
  g.back() = t_stop;
  return g;
}

std::vector<double> RunConfig::grid_lambda_t() const {
  const ModelParams p = params();
  std::vector<double> g = grid();
  for (double& t : g) t = p.to_lambda_t(t, unit);
  return g;
}

RevivalMode RunConfig::effective_revival_mode() const {
  if (revival_mode) return *revival_mode;
  return nu == 0.0 ? RevivalMode::full : RevivalMode::simplified;
}

void RunConfig::validate() const {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw InvalidParameter("config: alpha must be > 0");
  if (!std::isfinite(nu) || nu < 0.0) throw InvalidParameter("config: nu must be >= 0");
  if (t_count < 2) throw InvalidParameter("config: t-count must be at least 2");
  if (!std::isfinite(t_start) || !std::isfinite(t_stop) || !(t_start < t_stop)) {
    throw InvalidParameter("config: t-start must be below t-stop");
  }
  if (t_start < 0.0) throw InvalidParameter("config: t-start must be >= 0");
  if (methods.empty()) throw InvalidParameter("config: at least one method is required");
  for (std::size_t i = 0; i < methods.size(); ++i) {
    if (std::find(methods.begin(), methods.begin() + i, methods[i]) != methods.begin() + i) {
      throw InvalidParameter("config: method '" + std::string(to_string(methods[i])) + "' listed twice");
    }
  }
  const bool revival = std::find(methods.begin(), methods.end(), Method::revival) != methods.end();
  if (revival && !branches.empty() && std::none_of(branches.begin(), branches.end(), [](int n) { return n >= 1; })) {
    throw InvalidParameter("config: the revival method needs a branch n >= 1");
  }
}

}  // namespace jcsum::app
