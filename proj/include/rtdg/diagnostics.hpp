#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rtdg/dg_solver.hpp"

namespace rtdg {

/// One mesh of a convergence study. Rates are NaN on the first row.
struct ConvergenceRow {
  double h = 0.0;
  int cells = 0;  // cells per direction
  double error = 0.0;
  double rate = 0.0;
  double div_norm = 0.0;
  double div_error = 0.0;  // NaN when the scenario has no exact divergence
  double div_rate = 0.0;
  int steps = 0;
  double max_div_norm = 0.0;  // largest divergence norm seen during the run
};

struct ConvergenceConfig {
  std::string scenario = "test2a";
  int degree = 1;
  int cells = 16;       // coarsest mesh, cells per direction
  int refinements = 3;  // number of meshes
  double cfl = 0.8;
  double t_final = -1.0;  // negative: use the scenario's final time
  int div_every = 1;
};

/// log(e_{i-1}/e_i) / log(h_{i-1}/h_i); the first entry is NaN.
std::vector<double> observed_rates(const std::vector<double>& h, const std::vector<double>& e);

/// Runs (or projects, for projection-only scenarios) on `refinements` meshes
/// with cells, 2 cells, 4 cells, ... per direction. Progress lines go to `log`
/// when it is non-null.
std::vector<ConvergenceRow> convergence_study(const ConvergenceConfig& config, std::ostream* log = nullptr);

/// Errors of a single state against the scenario's exact data at time t.
ConvergenceRow measure(const Scenario& s, const FieldState& state, double t);

/// Fixed-width console table.
std::string format_table(const std::vector<ConvergenceRow>& rows);

}  // namespace rtdg
