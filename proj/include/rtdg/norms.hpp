#pragma once

#include <vector>

#include "rtdg/rt_element.hpp"
#include "rtdg/types.hpp"

namespace rtdg {

// All norms integrate with (k+3)^2 Gauss points per cell.

/// Per-cell contributions of ||B - B_h||^2; the global norm is the square root of their sum.
std::vector<double> field_error_squared_per_cell(const FieldState& state, const VectorField& exact, double t);

double l2_field_error(const FieldState& state, const VectorField& exact, double t);
double l2_div_norm(const FieldState& state);
double l2_div_error(const FieldState& state, const ScalarField& exact_div, double t);

}  // namespace rtdg
