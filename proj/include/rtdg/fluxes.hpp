#pragma once

#include <array>
#include <optional>

#include "rtdg/mesh.hpp"
#include "rtdg/types.hpp"

namespace rtdg {

/// E = v_y B_x - v_x B_y, the scalar electric field of the 2-D induction equation.
inline double electric_field(Vec2 b, Vec2 v) { return v.y * b.x - v.x * b.y; }

/// Traces at one face quadrature point. `normal` is the single-valued normal
/// component; `lower`/`upper` are the tangential component on the left/right
/// (vertical face) or below/above (horizontal face) side.
struct FaceTraceStates {
  double normal = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

/// Upwind face flux. Continuous in v: at v.n == 0 the tangential states are averaged.
double face_flux(const FaceTraceStates& s, Vec2 v, Orientation orientation);

/// The four independent traces at a vertex: B_x on the vertical faces above
/// and below it, B_y on the horizontal faces left and right of it.
struct VertexStates {
  double bx_up = 0.0;
  double bx_down = 0.0;
  double by_left = 0.0;
  double by_right = 0.0;
};

/// Full (B_x, B_y) states of the four quadrants, indexed by Quadrant.
using QuadrantStates = std::array<Vec2, 4>;

/// Compact multidimensional upwind vertex flux.
double vertex_flux(const VertexStates& s, Vec2 v);
/// Case-wise upwind selection (E_DL, E_UL, E_DR, E_UR); ties go to the
/// "otherwise" branch of each sign test.
double vertex_flux_casewise(const VertexStates& s, Vec2 v);
/// Four-state form, valid also when the normal components of the quadrant
/// states disagree (inflow boundary vertices).
double vertex_flux_four_state(const QuadrantStates& q, Vec2 v);

QuadrantStates quadrant_states(const VertexStates& s);

/// Which sides of the domain a boundary vertex lies on.
struct BoundarySides {
  bool left = false;
  bool right = false;
  bool bottom = false;
  bool top = false;
};

/// Completes the states of a boundary face. `interior_tangential` is the
/// tangential trace of the one existing cell, on the side given by
/// `interior_is_lower`. Inflow (v.n_out < 0) takes the ghost tangential
/// component from `boundary_value`; outflow copies the interior one.
/// Throws std::invalid_argument for inflow without boundary data.
FaceTraceStates complete_boundary_face(double normal, double interior_tangential, bool interior_is_lower,
                                       Orientation orientation, Vec2 v,
                                       const std::optional<Vec2>& boundary_value);

/// Completes the quadrant states of a boundary vertex. Missing quadrants across
/// an inflow side take the tangential component from `boundary_value` and the
/// normal component from the mirrored interior quadrant; across an outflow side
/// they copy the mirrored interior quadrant. Exterior corner quadrants at an
/// inflow corner take `boundary_value` entirely.
QuadrantStates complete_boundary_vertex(const std::array<std::optional<Vec2>, 4>& present,
                                        const BoundarySides& sides, Vec2 v,
                                        const std::optional<Vec2>& boundary_value);

}  // namespace rtdg
