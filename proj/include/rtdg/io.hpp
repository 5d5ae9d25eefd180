#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rtdg/diagnostics.hpp"
#include "rtdg/dg_solver.hpp"
#include "rtdg/rt_element.hpp"

namespace rtdg {

/// Settings shared by the CLI subcommands. A config file holds `key = value`
/// lines with the same names as the command line flags; `#` starts a comment.
struct RunConfig {
  std::string scenario = "test2a";
  int degree = 1;
  int cells = 32;
  int refinements = 3;
  double cfl = 0.8;
  double tfinal = -1.0;  // negative: scenario default
  std::string out = "out";
  int vtk_every = 0;     // 0: only the final state
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);
/// Applies one key/value pair; throws std::invalid_argument on unknown keys or bad values.
void apply_config_value(RunConfig& config, const std::string& key, const std::string& value);
void validate(const RunConfig& config);

/// Legacy ASCII VTK structured grid sampling B_h on a lattice of k+2 equispaced
/// points per cell and direction (shared lattice points are written once and
/// take the value of the cell to their upper right, clamped at the domain edge).
/// Point data: Bx, By, Bmag, divB.
void write_vtk(std::ostream& out, const FieldState& state, double t);
void write_vtk(const std::string& path, const FieldState& state, double t);

/// Columns: h, cells, error, rate, div_norm, div_error, div_rate. NaN is written as an empty field.
void write_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
void write_csv(const std::string& path, const std::vector<ConvergenceRow>& rows);
std::vector<ConvergenceRow> read_csv(std::istream& in);

/// Columns: step, t, dt, div_norm (empty when not computed for that step).
void write_run_log(std::ostream& out, const std::vector<StepRecord>& history);

}  // namespace rtdg
