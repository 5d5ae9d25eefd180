#pragma once

#include "rtdg/basis.hpp"
#include "rtdg/mass_system.hpp"
#include "rtdg/mesh.hpp"
#include "rtdg/rt_element.hpp"
#include "rtdg/types.hpp"

namespace rtdg {

/// A vector field given in closed form. When `stream` is set the field is
/// (d Phi/dy, -d Phi/dx) and can be projected without divergence error.
struct AnalyticField {
  StaticVectorField value;
  StaticScalarField stream;
  StaticScalarField divergence;
};

/// Moment projection onto RT_k: face moments against P_k, cell moments against
/// d/dx Q_kk and d/dy Q_kk, all integrated with (k+3)-point Gauss rules and
/// solved cell by cell. Shared faces are projected once.
FieldState project(const AnalyticField& field, const CartesianMesh& mesh, int k);

/// Interpolates Phi into Q_{k+1,k+1} on every cell (vertex values, edge moments
/// against P_{k-1}, cell moments against Q_{k-1,k-1}) and projects curl(Phi_h),
/// which lies in RT_k, exactly. The result
/// is divergence free up to roundoff.
FieldState project_divfree(const StaticScalarField& stream, const CartesianMesh& mesh, int k);

/// Dispatches to project_divfree when the field carries a stream function.
FieldState project_field(const AnalyticField& field, const CartesianMesh& mesh, int k);

/// Integral over a cell of div(B_h) times phi, phi = p_s(xi - 1/2) p_t(eta - 1/2)
/// in Q_{k,k}, evaluated with an exact Gauss rule.
double divergence_moments(const FieldState& state, int cell, ModalTerm phi);

}  // namespace rtdg
