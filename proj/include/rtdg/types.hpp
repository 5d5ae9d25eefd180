#pragma once

#include <functional>

namespace rtdg {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

// f(x, y, t)
using VectorField = std::function<Vec2(double, double, double)>;
using ScalarField = std::function<double(double, double, double)>;

// f(x, y), used for time-independent data such as initial conditions
using StaticVectorField = std::function<Vec2(double, double)>;
using StaticScalarField = std::function<double(double, double)>;

}  // namespace rtdg
