#include <gtest/gtest.h>

#include <random>

#include "rtdg/fluxes.hpp"

using namespace rtdg;

namespace {
constexpr int DL = static_cast<int>(Quadrant::kDL);
constexpr int DR = static_cast<int>(Quadrant::kDR);
constexpr int UL = static_cast<int>(Quadrant::kUL);
constexpr int UR = static_cast<int>(Quadrant::kUR);
}  // namespace

TEST(FaceFlux, UpwindExample) {
  EXPECT_DOUBLE_EQ(face_flux({2.0, 3.0, 7.0}, {1.0, 0.0}, Orientation::kVertical), -3.0);
  EXPECT_DOUBLE_EQ(face_flux({2.0, 3.0, 7.0}, {-1.0, 0.0}, Orientation::kVertical), 7.0);
  // horizontal: normal B_y = 2, B_x below 3, above 7; v_y > 0 takes the lower state
  EXPECT_DOUBLE_EQ(face_flux({2.0, 3.0, 7.0}, {0.0, 1.0}, Orientation::kHorizontal), 3.0);
  EXPECT_DOUBLE_EQ(face_flux({2.0, 3.0, 7.0}, {0.0, -1.0}, Orientation::kHorizontal), -7.0);
}

TEST(FaceFlux, TangentialVelocity) {
  EXPECT_DOUBLE_EQ(face_flux({2.0, 3.0, 7.0}, {0.0, 1.5}, Orientation::kVertical), 3.0);
  EXPECT_DOUBLE_EQ(face_flux({2.0, 3.0, 7.0}, {0.5, 0.0}, Orientation::kHorizontal), -1.0);
}

TEST(FaceFlux, ConsistentForContinuousStates) {
  std::mt19937 gen(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n < 200; ++n) {
    const Vec2 b{u(gen), u(gen)};
    const Vec2 v{u(gen), u(gen)};
    EXPECT_NEAR(face_flux({b.x, b.y, b.y}, v, Orientation::kVertical), electric_field(b, v), 1e-14);
    EXPECT_NEAR(face_flux({b.y, b.x, b.x}, v, Orientation::kHorizontal), electric_field(b, v), 1e-14);
    const VertexStates s{b.x, b.x, b.y, b.y};
    EXPECT_NEAR(vertex_flux(s, v), electric_field(b, v), 1e-14);
  }
}

TEST(VertexFlux, CaseSelection) {
  const VertexStates s{1.0, 2.0, 3.0, 4.0};  // bx_up, bx_down, by_left, by_right
  EXPECT_DOUBLE_EQ(vertex_flux(s, {1.0, 1.0}), 1.0 * 2.0 - 1.0 * 3.0);    // DL
  EXPECT_DOUBLE_EQ(vertex_flux(s, {-1.0, 1.0}), 1.0 * 2.0 + 1.0 * 4.0);   // DR
  EXPECT_DOUBLE_EQ(vertex_flux(s, {1.0, -1.0}), -1.0 * 1.0 - 1.0 * 3.0);  // UL
  EXPECT_DOUBLE_EQ(vertex_flux(s, {-1.0, -1.0}), -1.0 * 1.0 + 4.0);       // UR
  EXPECT_DOUBLE_EQ(vertex_flux(s, {0.0, 0.0}), 0.0);
}

TEST(VertexFlux, FlipSymmetry) {
  // Negating the velocity selects the opposite quadrant.
  const VertexStates s{1.0, 2.0, 3.0, 4.0};
  const auto q = quadrant_states(s);
  for (double sx : {-1.0, 1.0}) {
    for (double sy : {-1.0, 1.0}) {
      const Vec2 v{0.7 * sx, 1.3 * sy};
      const int up = sy > 0 ? 0 : 2;
      const int right = sx > 0 ? 0 : 1;
      EXPECT_NEAR(vertex_flux(s, v), electric_field(q[up + right], v), 1e-15);
      const Vec2 w{-v.x, -v.y};
      EXPECT_NEAR(vertex_flux(s, w), electric_field(q[(2 - up) + (1 - right)], w), 1e-15);
    }
  }
}

TEST(VertexFlux, ThreeFormsAgree) {
  std::mt19937 gen(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < 1000; ++n) {
    const VertexStates s{u(gen), u(gen), u(gen), u(gen)};
    const Vec2 v{u(gen), u(gen)};
    const double a = vertex_flux(s, v);
    EXPECT_NEAR(a, vertex_flux_casewise(s, v), 1e-14);
    EXPECT_NEAR(a, vertex_flux_four_state(quadrant_states(s), v), 1e-14);
  }
}

TEST(BoundaryFace, OutflowCopiesInterior) {
  // interior on the left of a right boundary face, v_x > 0: outflow
  const auto s = complete_boundary_face(2.0, 5.0, true, Orientation::kVertical, {1.0, 0.0}, std::nullopt);
  EXPECT_EQ(s.lower, 5.0);
  EXPECT_EQ(s.upper, 5.0);
  EXPECT_DOUBLE_EQ(face_flux(s, {1.0, 0.0}, Orientation::kVertical), -5.0);
}

TEST(BoundaryFace, InflowUsesBoundaryData) {
  // left boundary face (interior above/right), v_x > 0: inflow
  const auto s = complete_boundary_face(2.0, 5.0, false, Orientation::kVertical, {1.0, 0.0}, Vec2{2.0, -1.0});
  EXPECT_EQ(s.lower, -1.0);
  EXPECT_EQ(s.upper, 5.0);
  EXPECT_DOUBLE_EQ(face_flux(s, {1.0, 0.0}, Orientation::kVertical), 1.0);
  EXPECT_THROW(complete_boundary_face(2.0, 5.0, false, Orientation::kVertical, {1.0, 0.0}, std::nullopt),
               std::invalid_argument);
  // bottom boundary, v_y > 0
  const auto h = complete_boundary_face(1.0, 4.0, false, Orientation::kHorizontal, {0.0, 1.0}, Vec2{-3.0, 1.0});
  EXPECT_EQ(h.lower, -3.0);
}

TEST(BoundaryVertex, OutflowRightSide) {
  // right-side vertex: only the left quadrants exist; v_x > 0 is outflow
  std::array<std::optional<Vec2>, 4> present;
  present[DL] = Vec2{1.0, 2.0};
  present[UL] = Vec2{3.0, 2.0};
  const Vec2 v{1.0, 0.5};
  const auto q = complete_boundary_vertex(present, {false, true, false, false}, v, std::nullopt);
  EXPECT_EQ(q[DR].x, 1.0);
  EXPECT_EQ(q[UR].x, 3.0);
  EXPECT_DOUBLE_EQ(vertex_flux_four_state(q, v), electric_field(*present[DL], v));
}

TEST(BoundaryVertex, InflowMatchingDataIsInteriorFlux) {
  std::mt19937 gen(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < 100; ++n) {
    // a smooth point: all quadrants equal; left-side inflow with B* equal to the trace
    const Vec2 b{u(gen), u(gen)};
    const Vec2 v{std::abs(u(gen)) + 0.1, u(gen)};
    std::array<std::optional<Vec2>, 4> present;
    present[DR] = b;
    present[UR] = b;
    const auto q = complete_boundary_vertex(present, {true, false, false, false}, v, b);
    const VertexStates s{b.x, b.x, b.y, b.y};
    EXPECT_NEAR(vertex_flux_four_state(q, v), vertex_flux(s, v), 1e-14);
  }
}

TEST(BoundaryVertex, InflowCorner) {
  std::array<std::optional<Vec2>, 4> present;
  present[UR] = Vec2{1.0, 1.0};
  const Vec2 star{5.0, 7.0};
  const auto q = complete_boundary_vertex(present, {true, false, true, false}, {1.0, 1.0}, star);
  EXPECT_EQ(q[DL].x, 5.0);
  EXPECT_EQ(q[UL].y, 7.0);
  EXPECT_EQ(q[DR].x, 5.0);
  EXPECT_THROW(complete_boundary_vertex(present, {true, false, true, false}, {1.0, 1.0}, std::nullopt),
               std::invalid_argument);
  // outflow corner copies the interior quadrant
  const auto out = complete_boundary_vertex(present, {true, false, true, false}, {-1.0, -1.0}, std::nullopt);
  for (const Vec2& s : out) EXPECT_EQ(s.x, 1.0);
}

TEST(BoundaryVertex, InflowEdgeKeepsNormalComponent) {
  // right-side vertex with v_x < 0: ghosts take B_x from the boundary face, B_y from B*
  std::array<std::optional<Vec2>, 4> present;
  present[DL] = Vec2{1.0, 2.0};
  present[UL] = Vec2{3.0, 2.0};
  const Vec2 star{-4.0, 6.0};
  const Vec2 v{-0.5, 1.0};
  const auto q = complete_boundary_vertex(present, {false, true, false, false}, v, star);
  EXPECT_EQ(q[DR].x, 1.0);
  EXPECT_EQ(q[UR].x, 3.0);
  EXPECT_EQ(q[DR].y, 6.0);
  EXPECT_EQ(q[UR].y, 6.0);
  // upwind in y takes the lower face trace, upwind in x the boundary data
  EXPECT_DOUBLE_EQ(vertex_flux_four_state(q, v), v.y * 1.0 - v.x * 6.0);
}
