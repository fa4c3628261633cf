#include "jcsum/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include "jcsum/asymptotics.hpp"
#include "jcsum/error.hpp"
#include "jcsum/exact.hpp"
#include "jcsum/hankel.hpp"
#include "jcsum/saddle.hpp"

#ifndef JCSUM_VERSION
#define JCSUM_VERSION "unknown"
#endif

namespace jcsum::app {

namespace {

constexpr double kSeriesBound = 1.1;

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ";" : "") + parts[i];
  return s;
}

std::vector<BranchIndex> saddle_branches(const RunConfig& cfg, double t_max) {
  if (cfg.branches.empty()) return default_branches(cfg.params(), t_max);
  std::vector<BranchIndex> out;
  for (int n : cfg.branches) out.push_back(BranchIndex::for_revival(n));
  return out;
}

std::vector<int> revival_indices(const RunConfig& cfg, double t_max) {
  std::vector<int> out;
  if (cfg.branches.empty()) {
    const int last = static_cast<int>(std::floor(t_max / cfg.params().revival_period())) + 1;
    for (int n = 1; n <= last; ++n) out.push_back(n);
    return out;
  }
  for (int n : cfg.branches) {
    if (n >= 1 && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Saddle branches as they appear in column names and metadata.
std::vector<int> canonical_indices(const std::vector<BranchIndex>& bs) {
  std::vector<int> ns;
  for (const auto& b : bs) ns.push_back(std::abs(b.revival_index()));
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

void common_metadata(Table& t, const RunConfig& cfg, const char* command) {
  const ModelParams p = cfg.params();
  t.metadata = {{"program", "jcsum"},
                {"version", JCSUM_VERSION},
                {"command", command},
                {"alpha", format_number(cfg.alpha)},
                {"nu", format_number(cfg.nu)},
                {"mu", format_number(p.mu)},
                {"unit", std::string(to_string(cfg.unit))},
                {"t_start", format_number(cfg.t_start)},
                {"t_stop", format_number(cfg.t_stop)},
                {"t_count", std::to_string(cfg.t_count)}};
}

}  // namespace

void InversionSeries::validate() const {
  for (const auto& [m, v] : values) {
    if (v.size() != time_grid.size()) throw Error("InversionSeries: misaligned column");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!(std::abs(v[i]) <= kSeriesBound)) {
        throw NumericalFailure("InversionSeries: " + std::string(to_string(m)) + " value " + format_number(v[i]) +
                                   " at t = " + format_number(time_grid[i]) + " is outside [-1.1, 1.1]",
                               v[i]);
      }
    }
  }
  for (const auto& [n, v] : per_branch) {
    if (v.size() != time_grid.size()) throw Error("InversionSeries: misaligned branch column");
  }
}

double static_offset(const RunConfig& cfg) {
  switch (cfg.static_part) {
    case StaticPartMode::exact:
      return static_part(cfg.alpha, cfg.params().mu).value;
    case StaticPartMode::minus_nu:
      return -cfg.nu;
    case StaticPartMode::none:
      return 0.0;
  }
  return 0.0;
}

InversionSeries compute_series(const RunConfig& cfg) {
  cfg.validate();
  const ModelParams p = cfg.params();
  InversionSeries s;
  s.time_grid = cfg.grid_lambda_t();
  const auto& ts = s.time_grid;
  const double t_max = ts.back();
  const double offset = p.resonant() ? 0.0 : static_offset(cfg);

  for (Method m : cfg.methods) {
    std::vector<double> v(ts.size());
    switch (m) {
      case Method::exact: {
        const PhotonDistribution dist = make_poisson(cfg.alpha);
        for (std::size_t i = 0; i < ts.size(); ++i) v[i] = inversion_exact(dist, p, ts[i]);
        break;
      }
      case Method::contour:
        for (std::size_t i = 0; i < ts.size(); ++i) {
          v[i] = p.resonant() ? inversion_contour_resonant(cfg.alpha, ts[i]).value
                              : inversion_contour_detuned(p, ts[i]).value + offset;
        }
        break;
      case Method::saddle: {
        const auto bs = saddle_branches(cfg, t_max);
        const auto res = inversion_saddle_grid(p, ts, bs, SaddleOptions{cfg.policy});
        for (std::size_t i = 0; i < ts.size(); ++i) v[i] = res[i].total + offset;
        if (cfg.per_branch) {
          const auto ns = canonical_indices(bs);
          for (std::size_t j = 0; j < ns.size(); ++j) {
            std::vector<double> col(ts.size());
            for (std::size_t i = 0; i < ts.size(); ++i) col[i] = res[i].branches[j].value;
            s.per_branch.emplace_back(ns[j], std::move(col));
          }
        }
        break;
      }
      case Method::collapse:
        for (std::size_t i = 0; i < ts.size(); ++i) v[i] = collapse_detuned(cfg.alpha, cfg.nu, ts[i]) + offset;
        break;
      case Method::revival: {
        const auto ns = revival_indices(cfg, t_max);
        const RevivalMode mode = cfg.effective_revival_mode();
        for (std::size_t i = 0; i < ts.size(); ++i) {
          double acc = 0.0;
          for (int n : ns) acc += revival_detuned(cfg.alpha, cfg.nu, n, ts[i], mode);
          v[i] = acc + offset;
        }
        break;
      }
    }
    s.values.emplace_back(m, std::move(v));
  }
  s.validate();
  return s;
}

Table inversion_table(const RunConfig& cfg) {
  const InversionSeries s = compute_series(cfg);
  const ModelParams p = cfg.params();
  Table t;
  common_metadata(t, cfg, "inversion");
  std::vector<std::string> names;
  for (Method m : cfg.methods) names.emplace_back(to_string(m));
  t.metadata.emplace_back("methods", join(names));
  const bool has_saddle = std::find(cfg.methods.begin(), cfg.methods.end(), Method::saddle) != cfg.methods.end();
  const bool has_revival = std::find(cfg.methods.begin(), cfg.methods.end(), Method::revival) != cfg.methods.end();
  if (has_saddle) {
    std::vector<std::string> bs;
    for (int n : canonical_indices(saddle_branches(cfg, s.time_grid.back()))) bs.push_back(std::to_string(n));
    t.metadata.emplace_back("saddle_branches", join(bs));
    t.metadata.emplace_back("policy", std::string(to_string(cfg.policy)));
  }
  if (has_revival) {
    std::vector<std::string> ns;
    for (int n : revival_indices(cfg, s.time_grid.back())) ns.push_back(std::to_string(n));
    t.metadata.emplace_back("revivals", join(ns));
    t.metadata.emplace_back("revival_mode", std::string(to_string(cfg.effective_revival_mode())));
  }
  if (!p.resonant()) {
    t.metadata.emplace_back("static_part", std::string(to_string(cfg.static_part)));
    t.metadata.emplace_back("static_value", format_number(static_offset(cfg)));
  }

  t.columns.push_back("t");
  for (Method m : cfg.methods) t.columns.emplace_back(to_string(m));
  for (const auto& [n, col] : s.per_branch) t.columns.push_back("saddle_n" + std::to_string(n));

  const std::vector<double> shown = cfg.grid();
  for (std::size_t i = 0; i < shown.size(); ++i) {
    std::vector<Cell> row{shown[i]};
    for (const auto& [m, v] : s.values) row.emplace_back(v[i]);
    for (const auto& [n, v] : s.per_branch) row.emplace_back(v[i]);
    t.add_row(std::move(row));
  }
  return t;
}

Table trajectory_table(const RunConfig& cfg) {
  cfg.validate();
  const ModelParams p = cfg.params();
  std::vector<int> ns = cfg.branches;
  if (ns.empty()) ns = {0, 1, 2, 3};
  const std::vector<double> shown = cfg.grid();
  const std::vector<double> ts = cfg.grid_lambda_t();
  std::vector<double> taus;
  std::vector<std::size_t> rows_of;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] > 0.0) {
      taus.push_back(p.tau(ts[i]));
      rows_of.push_back(i);
    }
  }
  if (taus.empty()) throw InvalidParameter("trajectory: the grid has no point with t > 0");

  Table t;
  common_metadata(t, cfg, "trajectory");
  t.columns = {"branch", "k", "conjugate", "t", "tau", "re_F", "im_F", "re_phi", "im_phi", "abs_f", "arg_f"};
  for (int n : ns) {
    const BranchIndex b = BranchIndex::for_revival(n);
    const SaddleTrajectory tr = trace_trajectory(b, cfg.nu, taus);
    double worst = 0.0;
    for (const auto& smp : tr.samples()) {
      worst = std::max(worst, std::abs(saddle_residual(smp.F, smp.tau, cfg.nu)) / std::max(1.0, 0.25 * smp.tau));
    }
    const auto& first = tr.samples().front();
    t.metadata.emplace_back("start_F_n" + std::to_string(n),
                            format_number(first.F.real()) + (first.F.imag() < 0 ? "" : "+") +
                                format_number(first.F.imag()) + "i");
    t.metadata.emplace_back("max_residual_n" + std::to_string(n), format_number(worst));
    for (std::size_t j = 0; j < tr.samples().size(); ++j) {
      const auto& smp = tr.samples()[j];
      t.add_row({std::int64_t{n}, std::int64_t{b.k}, std::int64_t{b.conjugate_copy ? 1 : 0}, shown[rows_of[j]],
                 smp.tau, smp.F.real(), smp.F.imag(), smp.phi.real(), smp.phi.imag(), std::abs(smp.f),
                 std::arg(smp.f)});
    }
  }
  return t;
}

Table times_table(const RunConfig& cfg) {
  cfg.validate();
  const ModelParams p = cfg.params();
  int n_max = 3;
  for (int n : cfg.branches) n_max = std::max(n_max, n);
  Table t;
  common_metadata(t, cfg, "times");
  t.columns = {"quantity", "n", "value", "lambda_t"};
  auto add = [&](const char* what, int n, double lambda_t) {
    t.add_row({std::string(what), std::int64_t{n}, p.from_lambda_t(lambda_t, cfg.unit), lambda_t});
  };
  const auto rev = revival_times(cfg.alpha, cfg.nu, n_max);
  for (int n = 1; n <= n_max; ++n) add("revival", n, rev[n - 1]);
  if (p.resonant()) {
    for (const auto& c : crossing_times(cfg.alpha, n_max)) {
      add("crossing_formula", c.n, c.formula);
      add("crossing_refined", c.n, c.refined);
    }
  } else {
    t.metadata.emplace_back("crossings", "resonant only");
  }
  add("collapse_width", 0, std::sqrt(1.0 + cfg.nu));
  return t;
}

void emit(const Table& t, const RunConfig& cfg, std::ostream& fallback) {
  auto write = [&](std::ostream& os) {
    if (cfg.format == OutputFormat::csv) {
      write_csv(os, t);
    } else {
      write_json(os, t);
    }
  };
  if (cfg.out.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open output file '" + cfg.out + "'");
  write(f);
  f.flush();
  if (!f) throw Error("failed writing output file '" + cfg.out + "'");
}

int cmd_inversion(const RunConfig& cfg, std::ostream& out) {
  emit(inversion_table(cfg), cfg, out);
  return 0;
}

int cmd_trajectory(const RunConfig& cfg, std::ostream& out) {
  emit(trajectory_table(cfg), cfg, out);
  return 0;
}

int cmd_times(const RunConfig& cfg, std::ostream& out) {
  emit(times_table(cfg), cfg, out);
  return 0;
}

}  // namespace jcsum::app
