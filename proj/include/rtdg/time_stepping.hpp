#pragma once

#include <cstddef>
#include <vector>

namespace rtdg {

/// Minimal state wrapper so plain vectors can go through ssp_rk3_step.
struct VectorState {
  std::vector<double> data;
  std::vector<double>& values() { return data; }
  const std::vector<double>& values() const { return data; }
};

/// One step of the three-stage, third-order SSP Runge-Kutta scheme in
/// Shu-Osher form. `rates(u, t, out)` writes du/dt into `out`; stage times are
/// t, t + dt and t + dt/2.
template <class State, class Rates>
void ssp_rk3_step(State& u, double t, double dt, Rates&& rates) {
  State l = u;
  State u1 = u;
  State u2 = u;
  auto& un = u.values();
  auto& lv = l.values();
  auto& v1 = u1.values();
  auto& v2 = u2.values();
  const std::size_t n = un.size();

  rates(u, t, l);
  for (std::size_t i = 0; i < n; ++i) v1[i] = un[i] + dt * lv[i];

  rates(u1, t + dt, l);
  for (std::size_t i = 0; i < n; ++i) v2[i] = 0.75 * un[i] + 0.25 * (v1[i] + dt * lv[i]);

  rates(u2, t + 0.5 * dt, l);
  for (std::size_t i = 0; i < n; ++i) un[i] = (un[i] + 2.0 * (v2[i] + dt * lv[i])) / 3.0;
}

}  // namespace rtdg
