#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "rtdg/basis.hpp"
#include "rtdg/mass_system.hpp"
#include "rtdg/mesh.hpp"
#include "rtdg/rt_element.hpp"
#include "rtdg/scenarios.hpp"
#include "rtdg/types.hpp"

namespace rtdg {

/// PDE data the residual needs. `source` and `boundary` may be empty; a
/// boundary function is required as soon as some boundary point is inflow.
struct InductionProblem {
  VectorField velocity;
  VectorField source;
  VectorField boundary;
  bool steady_velocity = false;  // sample the velocity once instead of per stage
};

struct TimeControls {
  double cfl = 0.8;
  double t_final = 0.0;
  double dt_max = 0.1;  // used when the velocity vanishes everywhere
  int div_every = 1;    // divergence norm cadence in steps (0 disables)
};

/// Right-hand sides of the face and cell moment equations, plus the cached
/// fluxes both assemblies share.
struct RHSBuffers {
  std::vector<double> vertex_flux;      // one value per vertex
  std::vector<double> vertical_flux;    // per vertical face quadrature point
  std::vector<double> horizontal_flux;  // per horizontal face quadrature point
  std::vector<double> vertical_rhs;     // (k+1) per vertical face
  std::vector<double> horizontal_rhs;   // (k+1) per horizontal face
  std::vector<double> cell_rhs_x;       // k(k+1) per cell
  std::vector<double> cell_rhs_y;
  std::vector<double> cell_dofs;        // gathered local dofs, per cell
};

class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Semi-discrete DG operator for dB/dt + curl E = -M on RT_k.
///
/// Face dofs follow a 1-D DG scheme along each face with the upwind face flux
/// inside the face and the vertex flux at its end points; interior dofs follow
/// the usual 2-D DG scheme. Both use the same face flux values, and every
/// vertex has a single flux value, so the divergence of B_h only changes
/// through M.
class InductionSolver {
 public:
  InductionSolver(const CartesianMesh& mesh, int k, InductionProblem problem);

  const CartesianMesh& mesh() const { return mesh_; }
  int degree() const { return k_; }
  const RTElement& element() const { return element_; }
  const CellMassBlocks& blocks() const { return blocks_; }
  const QuadratureRule1D& face_rule() const { return face_rule_; }
  const InductionProblem& problem() const { return problem_; }

  RHSBuffers make_buffers() const;

  /// Vertex fluxes, face fluxes and face-moment right-hand sides.
  void residual_faces(const FieldState& state, double t, RHSBuffers& buf) const;
  /// Cell-moment right-hand sides; reuses the face fluxes of residual_faces.
  void residual_cells(const FieldState& state, double t, RHSBuffers& buf) const;

  void compute_rates(const FieldState& state, double t, FieldState& rates) const;
  FieldState compute_rates(const FieldState& state, double t) const;

  /// dt = cfl / ((2k+1) max(|v_x|/dx + |v_y|/dy)) over face quadrature points
  /// and vertices at time t; dt_max if the velocity vanishes.
  double cfl_dt(double cfl, double t, double dt_max) const;

  /// Throws NonFiniteError if the new state contains NaN or Inf.
  void step_ssp_rk3(FieldState& state, double t, double dt) const;

 private:
  struct VelocitySamples {
    std::vector<Vec2> vertex;
    std::vector<Vec2> vertical;    // per vertical face quadrature point
    std::vector<Vec2> horizontal;  // per horizontal face quadrature point
    std::vector<Vec2> cell;        // per cell quadrature point
  };

  const VelocitySamples& velocity_at(double t) const;
  void sample_velocity(double t, VelocitySamples& out) const;

  CartesianMesh mesh_;
  int k_;
  InductionProblem problem_;
  RTElement element_;
  CellMassBlocks blocks_;
  QuadratureRule1D face_rule_;
  TestSpace face_tests_;
  TestSpace x_tests_;
  TestSpace y_tests_;

  // Element tables: a cell seen from the lower/upper side of a vertical or
  // horizontal face, and at the cell quadrature points.
  BasisTable vface_from_lower_;  // points (1, s_q)
  BasisTable vface_from_upper_;  // points (0, s_q)
  BasisTable hface_from_lower_;  // points (s_q, 1)
  BasisTable hface_from_upper_;  // points (s_q, 0)
  BasisTable cell_table_;        // points (s_a, s_b), a fastest
  std::vector<double> cell_weights_;

  std::vector<double> trace_at_q_;  // phi_hat_j(s_q), [j * nq + q]
  std::vector<double> trace_at_0_;
  std::vector<double> trace_at_1_;
  std::vector<double> face_test_q_;   // P_m(s_q - 1/2), [m * nq + q]
  std::vector<double> face_dtest_q_;  // P_m'(s_q - 1/2)
  std::vector<double> face_test_0_;   // P_m(-1/2)
  std::vector<double> face_test_1_;   // P_m(1/2)
  std::vector<double> xtest_cell_;       // psi^x_m at cell points, [m * np + p]
  std::vector<double> xtest_deta_cell_;  // d psi^x_m / d eta
  std::vector<double> ytest_cell_;
  std::vector<double> ytest_dxi_cell_;   // d psi^y_m / d xi
  std::vector<double> xtest_bottom_;     // psi^x_m(s_q - 1/2, -1/2)
  std::vector<double> xtest_top_;        // psi^x_m(s_q - 1/2, +1/2)
  std::vector<double> ytest_left_;       // psi^y_m(-1/2, s_q - 1/2)
  std::vector<double> ytest_right_;

  mutable VelocitySamples velocity_cache_;
  mutable double velocity_time_ = 0.0;
  mutable bool velocity_valid_ = false;
};

struct StepRecord {
  int step = 0;
  double t = 0.0;
  double dt = 0.0;
  double div_norm = 0.0;
};

struct RunResult {
  FieldState state;
  std::vector<StepRecord> history;
  int steps = 0;
  double final_time = 0.0;
};

/// Called after the initial projection (step 0) and after every step.
using StepObserver = std::function<void(const FieldState&, int step, double t)>;

InductionProblem make_problem(const Scenario& scenario);

/// Projects the initial field, then integrates with SSP-RK3 to controls.t_final
/// (the last step is clipped). Projection-only scenarios return the projection.
/// Throws NonFiniteError naming the failing step.
RunResult run(const Scenario& scenario, const CartesianMesh& mesh, int k, const TimeControls& controls,
              const StepObserver& observer = {});

}  // namespace rtdg
