#include "rtdg/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "rtdg/dg_solver.hpp"
#include "rtdg/fluxes.hpp"
#include "rtdg/norms.hpp"
#include "rtdg/projection.hpp"

namespace rtdg {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckResult check(const std::string& name, double value, double tol) {
  return {name, value <= tol, "value " + sci(value) + ", limit " + sci(tol)};
}

CheckResult mass_matrix_k1() {
  const CellMassBlocks b = assemble_blocks(1);
  const double r = std::sqrt(3.0);
  double err = 0.0;
  err = std::max(err, std::abs(b.full(0, 0) - 0.5));
  err = std::max(err, std::abs(b.full(1, 0) + 1.0 / (4.0 * r)));
  err = std::max(err, std::abs(b.full(8, 0) - 1.0 / 12.0));
  err = std::max(err, std::abs(b.full(8, 8) - 1.0 / 3.0));
  err = std::max(err, std::abs(b.full(9, 0) + r / 72.0));
  err = std::max(err, std::abs(b.full(9, 8) + r / 18.0));
  return check("mass matrix k=1 entries", err, 1e-13);
}

CheckResult divfree_projection() {
  const Scenario s = scenario("test1a");
  double worst = 0.0;
  for (int k = 0; k <= 2; ++k) {
    const CartesianMesh mesh(0.0, 0.0, 1.0, 1.0, 8, 8);
    worst = std::max(worst, l2_div_norm(project_field(s.initial, mesh, k)));
  }
  return check("stream-function projection is divergence free", worst, 1e-11);
}

CheckResult flux_forms() {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const VertexStates s{u(gen), u(gen), u(gen), u(gen)};
    const Vec2 v{u(gen), u(gen)};
    const double a = vertex_flux(s, v);
    worst = std::max(worst, std::abs(a - vertex_flux_casewise(s, v)));
    worst = std::max(worst, std::abs(a - vertex_flux_four_state(quadrant_states(s), v)));
  }
  return check("vertex flux forms agree", worst, 1e-14);
}

CheckResult divergence_preserved() {
  const Scenario s = scenario("test2a");
  double worst = 0.0;
  for (int k = 0; k <= 2; ++k) {
    const CartesianMesh mesh(-1.0, -1.0, 1.0, 1.0, 8, 8);
    TimeControls controls;
    controls.t_final = 0.3;
    const RunResult r = run(s, mesh, k, controls);
    for (const auto& rec : r.history) worst = std::max(worst, rec.div_norm);
  }
  return check("divergence stays at roundoff during evolution", worst, 1e-11);
}

CheckResult uniform_state_steady() {
  // A constant field with constant velocity and exact boundary data is steady.
  const CartesianMesh mesh(0.0, 0.0, 1.0, 1.0, 4, 4);
  double worst = 0.0;
  for (int k = 0; k <= 2; ++k) {
    AnalyticField f;
    f.value = [](double, double) { return Vec2{0.3, -0.7}; };
    const FieldState state = project(f, mesh, k);
    InductionProblem p;
    p.velocity = [](double, double, double) { return Vec2{1.0, 0.5}; };
    p.boundary = [](double, double, double) { return Vec2{0.3, -0.7}; };
    const InductionSolver solver(mesh, k, p);
    const FieldState rates = solver.compute_rates(state, 0.0);
    for (double r : rates.values()) worst = std::max(worst, std::abs(r));
  }
  return check("uniform state has zero rates", worst, 1e-12);
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  return {mass_matrix_k1(), divfree_projection(), flux_forms(), divergence_preserved(), uniform_state_steady()};
}

}  // namespace rtdg
