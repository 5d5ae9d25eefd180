#include "rtdg/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "rtdg/norms.hpp"

namespace rtdg {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

std::vector<double> observed_rates(const std::vector<double>& h, const std::vector<double>& e) {
  if (h.size() != e.size()) throw std::invalid_argument("observed_rates: size mismatch");
  std::vector<double> rates(h.size(), kNaN);
  for (std::size_t i = 1; i < h.size(); ++i) rates[i] = std::log(e[i - 1] / e[i]) / std::log(h[i - 1] / h[i]);
  return rates;
}

ConvergenceRow measure(const Scenario& s, const FieldState& state, double t) {
  ConvergenceRow row;
  const CartesianMesh& mesh = state.mesh();
  row.h = mesh.dx();
  row.cells = mesh.nx();
  row.error = s.exact ? l2_field_error(state, s.exact, t) : kNaN;
  row.div_norm = l2_div_norm(state);
  row.div_error = s.exact_div ? l2_div_error(state, s.exact_div, t) : kNaN;
  row.max_div_norm = row.div_norm;
  row.rate = kNaN;
  row.div_rate = kNaN;
  return row;
}

std::vector<ConvergenceRow> convergence_study(const ConvergenceConfig& config, std::ostream* log) {
  if (config.cells < 1 || config.refinements < 1) {
    throw std::invalid_argument("convergence_study: cells and refinements must be positive");
  }
  const Scenario s = scenario(config.scenario);
  TimeControls controls;
  controls.cfl = config.cfl;
  controls.t_final = config.t_final < 0.0 ? s.t_final : config.t_final;
  controls.div_every = config.div_every;

  std::vector<ConvergenceRow> rows;
  int n = config.cells;
  for (int r = 0; r < config.refinements; ++r, n *= 2) {
    const CartesianMesh mesh(s.domain.x_min, s.domain.y_min, s.domain.x_max, s.domain.y_max, n, n);
    const RunResult result = run(s, mesh, config.degree, controls);
    ConvergenceRow row = measure(s, result.state, result.final_time);
    row.steps = result.steps;
    for (const StepRecord& rec : result.history) row.max_div_norm = std::max(row.max_div_norm, rec.div_norm);
    rows.push_back(row);
    if (log) {
      char line[160];
      std::snprintf(line, sizeof line, "%s k=%d %dx%d steps=%d error=%.4e div=%.4e", s.name.c_str(), config.degree,
                    n, n, row.steps, row.error, row.div_norm);
      *log << line << std::endl;
    }
  }
  std::vector<double> h, e, d;
  for (const auto& row : rows) {
    h.push_back(row.h);
    e.push_back(row.error);
    d.push_back(row.div_error);
  }
  const auto rates = observed_rates(h, e);
  const auto div_rates = observed_rates(h, d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].rate = rates[i];
    rows[i].div_rate = div_rates[i];
  }
  return rows;
}

std::string format_table(const std::vector<ConvergenceRow>& rows) {
  std::string out = "       h     cells       error   rate    div_norm   div_error   rate\n";
  char line[160];
  auto num = [](double v, const char* fmt, char* buf, std::size_t n) {
    if (std::isnan(v)) {
      std::snprintf(buf, n, "%s", "-");
    } else {
      std::snprintf(buf, n, fmt, v);
    }
  };
  for (const auto& r : rows) {
    char rate[16], dnorm[16], derr[16], drate[16];
    num(r.rate, "%.2f", rate, sizeof rate);
    num(r.div_norm, "%.4e", dnorm, sizeof dnorm);
    num(r.div_error, "%.4e", derr, sizeof derr);
    num(r.div_rate, "%.2f", drate, sizeof drate);
    std::snprintf(line, sizeof line, "%8.4f %9d %11.4e %6s %11s %11s %6s\n", r.h, r.cells, r.error, rate, dnorm, derr,
                  drate);
    out += line;
  }
  return out;
}

}  // namespace rtdg
