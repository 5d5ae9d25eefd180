// Command line driver: solve, converge, project, selftest.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "rtdg/diagnostics.hpp"
#include "rtdg/io.hpp"
#include "rtdg/projection.hpp"
#include "rtdg/selftest.hpp"

namespace fs = std::filesystem;
using namespace rtdg;

namespace {

// Flag values are kept as strings so a config file and the command line go
// through the same parser; flags given on the command line win.
struct Flags {
  std::string config;
  std::map<std::string, std::string> values;
};

void add_flags(CLI::App* app, Flags& flags, bool evolve, bool refinements) {
  app->add_option("--config", flags.config, "key=value config file");
  auto add = [&](const std::string& key, const std::string& help) {
    app->add_option("--" + key, flags.values[key], help);
  };
  add("scenario", "test1a, test1b, test2a, test2b, test3 or test4");
  add("degree", "RT degree k (0, 1 or 2)");
  add("cells", "cells per direction (coarsest mesh for converge)");
  if (refinements) add("refinements", "number of meshes");
  if (evolve) {
    add("cfl", "CFL number");
    add("tfinal", "final time (default: scenario)");
  }
  add("out", "output directory");
  if (evolve && !refinements) add("vtk-every", "write VTK every N steps (0: final only)");
}

RunConfig resolve(const Flags& flags) {
  RunConfig config = flags.config.empty() ? RunConfig{} : parse_config_file(flags.config);
  for (const auto& [key, value] : flags.values) {
    if (!value.empty()) apply_config_value(config, key == "vtk-every" ? "vtk_every" : key, value);
  }
  validate(config);
  return config;
}

fs::path prepare(const RunConfig& config) {
  fs::path dir(config.out);
  fs::create_directories(dir);
  return dir;
}

std::string vtk_name(const std::string& scenario, int step) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%06d.vtk", scenario.c_str(), step);
  return buf;
}

int cmd_solve(const RunConfig& config) {
  const Scenario s = scenario(config.scenario);
  const CartesianMesh mesh(s.domain.x_min, s.domain.y_min, s.domain.x_max, s.domain.y_max, config.cells,
                           config.cells);
  const fs::path dir = prepare(config);
  TimeControls controls;
  controls.cfl = config.cfl;
  controls.t_final = config.tfinal < 0.0 ? s.t_final : config.tfinal;

  StepObserver observer;
  if (config.vtk_every > 0) {
    observer = [&](const FieldState& state, int step, double t) {
      if (step % config.vtk_every == 0) write_vtk((dir / vtk_name(s.name, step)).string(), state, t);
    };
  }
  const RunResult result = run(s, mesh, config.degree, controls, observer);
  write_vtk((dir / (s.name + "_final.vtk")).string(), result.state, result.final_time);
  {
    std::ofstream log(dir / "run_log.csv");
    write_run_log(log, result.history);
  }
  const ConvergenceRow row = measure(s, result.state, result.final_time);
  std::printf("%s k=%d %dx%d steps=%d t=%.6f\n", s.name.c_str(), config.degree, config.cells, config.cells,
              result.steps, result.final_time);
  if (!std::isnan(row.error)) std::printf("L2 error      %.6e\n", row.error);
  std::printf("L2 div norm   %.6e\n", row.div_norm);
  if (!std::isnan(row.div_error)) std::printf("L2 div error  %.6e\n", row.div_error);
  std::printf("output        %s\n", dir.string().c_str());
  return 0;
}

int cmd_converge(const RunConfig& config) {
  ConvergenceConfig cc;
  cc.scenario = config.scenario;
  cc.degree = config.degree;
  cc.cells = config.cells;
  cc.refinements = config.refinements;
  cc.cfl = config.cfl;
  cc.t_final = config.tfinal;
  cc.div_every = 0;
  const fs::path dir = prepare(config);
  const auto rows = convergence_study(cc, &std::cerr);
  std::cout << format_table(rows);
  const fs::path csv = dir / (config.scenario + "_k" + std::to_string(config.degree) + "_convergence.csv");
  write_csv(csv.string(), rows);
  std::cout << "wrote " << csv.string() << '\n';
  return 0;
}

int cmd_project(const RunConfig& config) {
  const Scenario s = scenario(config.scenario);
  const CartesianMesh mesh(s.domain.x_min, s.domain.y_min, s.domain.x_max, s.domain.y_max, config.cells,
                           config.cells);
  const fs::path dir = prepare(config);
  const FieldState state = project_field(s.initial, mesh, config.degree);
  write_vtk((dir / (s.name + "_projection.vtk")).string(), state, 0.0);
  const ConvergenceRow row = measure(s, state, 0.0);
  std::printf("%s k=%d %dx%d\n", s.name.c_str(), config.degree, config.cells, config.cells);
  if (!std::isnan(row.error)) std::printf("L2 error      %.6e\n", row.error);
  std::printf("L2 div norm   %.6e\n", row.div_norm);
  if (!std::isnan(row.div_error)) std::printf("L2 div error  %.6e\n", row.div_error);
  return 0;
}

int cmd_selftest() {
  bool ok = true;
  for (const auto& r : run_selftest()) {
    std::printf("%s  %s (%s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divergence-conforming DG solver for the 2-D induction equation"};
  app.require_subcommand(1);

  Flags solve_flags, converge_flags, project_flags;
  auto* solve = app.add_subcommand("solve", "evolve one scenario on one mesh");
  add_flags(solve, solve_flags, true, false);
  auto* converge = app.add_subcommand("converge", "error table over a sequence of meshes");
  add_flags(converge, converge_flags, true, true);
  auto* project = app.add_subcommand("project", "project a scenario's initial field");
  add_flags(project, project_flags, false, false);
  auto* selftest = app.add_subcommand("selftest", "quick invariant checks");

  CLI11_PARSE(app, argc, argv);
  try {
    if (solve->parsed()) return cmd_solve(resolve(solve_flags));
    if (converge->parsed()) return cmd_converge(resolve(converge_flags));
    if (project->parsed()) return cmd_project(resolve(project_flags));
    if (selftest->parsed()) return cmd_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
