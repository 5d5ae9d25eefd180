#include "rtdg/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rtdg {

namespace {

constexpr double kPi = std::numbers::pi;

// Gaussian bump 0.1 exp(-20 ((x - x0)^2 + y^2)) with its gradient and Hessian.
struct Gaussian {
  double x0 = 0.0;

  double value(double x, double y) const { return 0.1 * std::exp(-20.0 * ((x - x0) * (x - x0) + y * y)); }
  Vec2 gradient(double x, double y) const {
    const double e = value(x, y);
    return {-40.0 * (x - x0) * e, -40.0 * y * e};
  }
  // {d_xx, d_xy, d_yy}
  std::array<double, 3> hessian(double x, double y) const {
    const double e = value(x, y);
    const double u = x - x0;
    return {(1600.0 * u * u - 40.0) * e, 1600.0 * u * y * e, (1600.0 * y * y - 40.0) * e};
  }
  double laplacian(double x, double y) const {
    const auto h = hessian(x, y);
    return h[0] + h[2];
  }
};

Scenario test1a() {
  Scenario s;
  s.name = "test1a";
  s.domain = {0.0, 0.0, 1.0, 1.0};
  s.evolve = false;
  s.velocity = [](double, double, double) { return Vec2{}; };
  s.initial.stream = [](double x, double y) { return std::sin(2.0 * kPi * x) * std::sin(2.0 * kPi * y); };
  s.initial.value = [](double x, double y) {
    return Vec2{2.0 * kPi * std::sin(2.0 * kPi * x) * std::cos(2.0 * kPi * y),
                -2.0 * kPi * std::cos(2.0 * kPi * x) * std::sin(2.0 * kPi * y)};
  };
  s.initial.divergence = [](double, double) { return 0.0; };
  const auto b = s.initial.value;
  s.exact = [b](double x, double y, double) { return b(x, y); };
  s.exact_div = [](double, double, double) { return 0.0; };
  return s;
}

Scenario test1b() {
  Scenario s;
  s.name = "test1b";
  s.domain = {-1.0, -1.0, 1.0, 1.0};
  s.evolve = false;
  s.velocity = [](double, double, double) { return Vec2{}; };
  const Gaussian g{0.0};
  s.initial.value = [g](double x, double y) { return g.gradient(x, y); };
  s.initial.divergence = [g](double x, double y) { return g.laplacian(x, y); };
  s.exact = [g](double x, double y, double) { return g.gradient(x, y); };
  s.exact_div = [g](double x, double y, double) { return g.laplacian(x, y); };
  return s;
}

Scenario rotating_bump(const std::string& name, Domain domain, double t_final) {
  Scenario s;
  s.name = name;
  s.domain = domain;
  s.t_final = t_final;
  const Gaussian g{0.5};
  s.velocity = [](double x, double y, double) { return Vec2{-y, x}; };
  s.initial.stream = [g](double x, double y) { return g.value(x, y); };
  s.initial.value = [g](double x, double y) {
    const Vec2 d = g.gradient(x, y);
    return Vec2{d.y, -d.x};
  };
  s.initial.divergence = [](double, double) { return 0.0; };
  const auto b0 = s.initial.value;
  s.exact = [b0](double x, double y, double t) {
    const Vec2 r = rotation_matrix(-t) * Vec2{x, y};
    return rotation_matrix(t) * b0(r.x, r.y);
  };
  s.exact_div = [](double, double, double) { return 0.0; };
  s.boundary = s.exact;
  return s;
}

Scenario test3() {
  Scenario s;
  s.name = "test3";
  s.domain = {-1.0, -1.0, 1.0, 1.0};
  s.t_final = 2.0 * kPi;
  const Gaussian g{0.0};
  // v = (d psi/dy, -d psi/dx) with psi = sin(pi x) sin(pi y) / pi
  s.velocity = [](double x, double y, double) {
    return Vec2{std::sin(kPi * x) * std::cos(kPi * y), -std::cos(kPi * x) * std::sin(kPi * y)};
  };
  s.initial.value = [g](double x, double y) { return g.gradient(x, y); };
  s.initial.divergence = [g](double x, double y) { return g.laplacian(x, y); };
  s.exact = [g](double x, double y, double t) { return rotation_matrix(t) * g.gradient(x, y); };
  // div(R(t) grad phi) = cos(t) lap(phi); the sin(t) terms cancel.
  s.exact_div = [g](double x, double y, double t) {
    const auto h = g.hessian(x, y);
    return std::cos(t) * (h[0] + h[2]);
  };
  // M = -dB/dt - curl E with E = v_y B_x - v_x B_y:
  //   M_x = -dB_x/dt - dE/dy,  M_y = -dB_y/dt + dE/dx.
  s.source = [g](double x, double y, double t) {
    const double c = std::cos(t);
    const double sn = std::sin(t);
    const Vec2 d = g.gradient(x, y);
    const auto h = g.hessian(x, y);
    const double bx = c * d.x - sn * d.y;
    const double by = sn * d.x + c * d.y;
    const double bx_t = -sn * d.x - c * d.y;
    const double by_t = c * d.x - sn * d.y;
    const double bx_x = c * h[0] - sn * h[1];
    const double bx_y = c * h[1] - sn * h[2];
    const double by_x = sn * h[0] + c * h[1];
    const double by_y = sn * h[1] + c * h[2];

    const double sx = std::sin(kPi * x), cx = std::cos(kPi * x);
    const double sy = std::sin(kPi * y), cy = std::cos(kPi * y);
    const double vx = sx * cy;
    const double vy = -cx * sy;
    const double vx_x = kPi * cx * cy;
    const double vx_y = -kPi * sx * sy;
    const double vy_x = kPi * sx * sy;
    const double vy_y = -kPi * cx * cy;

    const double e_x = vy_x * bx + vy * bx_x - vx_x * by - vx * by_x;
    const double e_y = vy_y * bx + vy * bx_y - vx_y * by - vx * by_y;
    return Vec2{-bx_t - e_y, -by_t + e_x};
  };
  s.boundary = s.exact;
  return s;
}

Scenario test4() {
  Scenario s;
  s.name = "test4";
  s.domain = {-1.0, -1.0, 1.0, 1.0};
  s.t_final = 0.5;
  s.velocity = [](double, double, double) { return Vec2{1.0, 2.0}; };
  // Piecewise linear potential, continuous across x = y.
  s.initial.stream = [](double x, double y) { return x > y ? 2.0 * y - 2.0 * x : 0.0; };
  s.initial.value = [](double x, double y) { return x > y ? Vec2{2.0, 2.0} : Vec2{0.0, 0.0}; };
  s.initial.divergence = [](double, double) { return 0.0; };
  const auto b0 = s.initial.value;
  s.exact = [b0](double x, double y, double t) { return b0(x - t, y - 2.0 * t); };
  s.exact_div = [](double, double, double) { return 0.0; };
  s.boundary = s.exact;
  return s;
}

}  // namespace

Mat2 rotation_matrix(double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  return {{{c, -s}, {s, c}}};
}

std::vector<std::string> scenario_names() { return {"test1a", "test1b", "test2a", "test2b", "test3", "test4"}; }

Scenario scenario(const std::string& name) {
  if (name == "test1a") return test1a();
  if (name == "test1b") return test1b();
  if (name == "test2a") return rotating_bump("test2a", {-1.0, -1.0, 1.0, 1.0}, 2.0 * kPi);
  if (name == "test2b") return rotating_bump("test2b", {0.0, 0.0, 1.0, 1.0}, 0.5 * kPi);
  if (name == "test3") return test3();
  if (name == "test4") return test4();
  std::string names;
  for (const auto& n : scenario_names()) names += (names.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown scenario '" + name + "' (available: " + names + ")");
}

}  // namespace rtdg
