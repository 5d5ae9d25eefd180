#include "rtdg/fluxes.hpp"

#include <cmath>
#include <stdexcept>

namespace rtdg {

double face_flux(const FaceTraceStates& s, Vec2 v, Orientation orientation) {
  if (orientation == Orientation::kVertical) {
    // normal = B_x, tangential = B_y, upwind by sign of v_x
    return v.y * s.normal - 0.5 * v.x * (s.lower + s.upper) + 0.5 * std::abs(v.x) * (s.upper - s.lower);
  }
  // normal = B_y, tangential = B_x, upwind by sign of v_y
  return 0.5 * v.y * (s.lower + s.upper) - 0.5 * std::abs(v.y) * (s.upper - s.lower) - v.x * s.normal;
}

double vertex_flux(const VertexStates& s, Vec2 v) {
  return 0.5 * v.y * (s.bx_up + s.bx_down) - 0.5 * v.x * (s.by_left + s.by_right) -
         0.5 * std::abs(v.y) * (s.bx_up - s.bx_down) + 0.5 * std::abs(v.x) * (s.by_right - s.by_left);
}

double vertex_flux_casewise(const VertexStates& s, Vec2 v) {
  const double bx = v.y > 0.0 ? s.bx_down : s.bx_up;
  const double by = v.x > 0.0 ? s.by_left : s.by_right;
  return v.y * bx - v.x * by;
}

QuadrantStates quadrant_states(const VertexStates& s) {
  QuadrantStates q;
  q[static_cast<int>(Quadrant::kDL)] = {s.bx_down, s.by_left};
  q[static_cast<int>(Quadrant::kDR)] = {s.bx_down, s.by_right};
  q[static_cast<int>(Quadrant::kUL)] = {s.bx_up, s.by_left};
  q[static_cast<int>(Quadrant::kUR)] = {s.bx_up, s.by_right};
  return q;
}

double vertex_flux_four_state(const QuadrantStates& q, Vec2 v) {
  const Vec2 dl = q[static_cast<int>(Quadrant::kDL)];
  const Vec2 dr = q[static_cast<int>(Quadrant::kDR)];
  const Vec2 ul = q[static_cast<int>(Quadrant::kUL)];
  const Vec2 ur = q[static_cast<int>(Quadrant::kUR)];
  return 0.25 * v.y * (ul.x + ur.x + dl.x + dr.x) - 0.25 * v.x * (ul.y + ur.y + dl.y + dr.y) -
         0.5 * std::abs(v.y) * (0.5 * (ul.x + ur.x) - 0.5 * (dl.x + dr.x)) +
         0.5 * std::abs(v.x) * (0.5 * (ur.y + dr.y) - 0.5 * (ul.y + dl.y));
}

FaceTraceStates complete_boundary_face(double normal, double interior_tangential, bool interior_is_lower,
                                       Orientation orientation, Vec2 v,
                                       const std::optional<Vec2>& boundary_value) {
  const double vn = orientation == Orientation::kVertical ? v.x : v.y;
  // Outward normal is -n when the interior cell lies on the upper side.
  const double vn_out = interior_is_lower ? vn : -vn;
  double ghost = interior_tangential;
  if (vn_out < 0.0) {
    if (!boundary_value) throw std::invalid_argument("inflow boundary face without boundary data");
    ghost = orientation == Orientation::kVertical ? boundary_value->y : boundary_value->x;
  }
  return interior_is_lower ? FaceTraceStates{normal, interior_tangential, ghost}
                           : FaceTraceStates{normal, ghost, interior_tangential};
}

QuadrantStates complete_boundary_vertex(const std::array<std::optional<Vec2>, 4>& present,
                                        const BoundarySides& sides, Vec2 v,
                                        const std::optional<Vec2>& boundary_value) {
  // Inflow through the vertical (left/right) or horizontal (bottom/top) boundary side.
  const bool x_inflow = (sides.left && v.x > 0.0) || (sides.right && v.x < 0.0);
  const bool y_inflow = (sides.bottom && v.y > 0.0) || (sides.top && v.y < 0.0);

  // Inflow ghosts beside an edge keep the normal component of the boundary face
  // (single-valued in RT_k) and take the tangential component from B*.
  auto index = [](bool up, bool right) { return (up ? 2 : 0) + (right ? 1 : 0); };
  auto need_boundary = [&]() -> Vec2 {
    if (!boundary_value) throw std::invalid_argument("inflow boundary vertex without boundary data");
    return *boundary_value;
  };

  QuadrantStates out{};
  for (int up = 0; up < 2; ++up) {
    for (int right = 0; right < 2; ++right) {
      const int q = index(up, right);
      if (present[q]) {
        out[q] = *present[q];
        continue;
      }
      const bool outside_x = (right ? sides.right : sides.left);
      const bool outside_y = (up ? sides.top : sides.bottom);
      if (outside_x && outside_y) {
        const auto& mirror = present[index(!up, !right)];
        out[q] = (x_inflow || y_inflow || !mirror) ? need_boundary() : *mirror;
      } else if (outside_x) {
        const auto& mirror = present[index(up, !right)];
        if (!mirror) {
          out[q] = need_boundary();
        } else if (x_inflow) {
          out[q] = Vec2{mirror->x, need_boundary().y};
        } else {
          out[q] = *mirror;
        }
      } else {
        const auto& mirror = present[index(!up, right)];
        if (!mirror) {
          out[q] = need_boundary();
        } else if (y_inflow) {
          out[q] = Vec2{need_boundary().x, mirror->y};
        } else {
          out[q] = *mirror;
        }
      }
    }
  }
  return out;
}

}  // namespace rtdg
