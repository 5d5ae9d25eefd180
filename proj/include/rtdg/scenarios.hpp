#pragma once

#include <array>
#include <string>
#include <vector>

#include "rtdg/projection.hpp"
#include "rtdg/types.hpp"

namespace rtdg {

struct Domain {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 1.0;
  double y_max = 1.0;
};

/// One experiment: data for the induction equation dB/dt + curl E = -M with a
/// prescribed velocity. Projection-only cases have `evolve == false`.
struct Scenario {
  std::string name;
  Domain domain;
  bool evolve = true;
  VectorField velocity;
  AnalyticField initial;
  VectorField exact;       // optional exact solution B(x, y, t)
  ScalarField exact_div;   // optional exact divergence
  VectorField source;      // optional M(x, y, t)
  VectorField boundary;    // optional inflow data B*(x, y, t)
  double t_final = 0.0;
};

using Mat2 = std::array<std::array<double, 2>, 2>;

Mat2 rotation_matrix(double t);
inline Vec2 operator*(const Mat2& r, Vec2 v) {
  return {r[0][0] * v.x + r[0][1] * v.y, r[1][0] * v.x + r[1][1] * v.y};
}

/// Built-in scenarios: test1a, test1b, test2a, test2b, test3, test4.
/// Throws std::invalid_argument listing the valid names otherwise.
Scenario scenario(const std::string& name);
std::vector<std::string> scenario_names();

}  // namespace rtdg
