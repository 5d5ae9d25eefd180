#include "rtdg/dg_solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "rtdg/fluxes.hpp"
#include "rtdg/norms.hpp"
#include "rtdg/projection.hpp"
#include "rtdg/time_stepping.hpp"

namespace rtdg {

namespace {

std::vector<std::array<double, 2>> points_on_line(const QuadratureRule1D& q, std::optional<double> xi,
                                                  std::optional<double> eta) {
  std::vector<std::array<double, 2>> pts;
  for (double s : q.points) pts.push_back({xi ? *xi : s, eta ? *eta : s});
  return pts;
}

double dot(const double* a, const double* b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

InductionSolver::InductionSolver(const CartesianMesh& mesh, int k, InductionProblem problem)
    : mesh_(mesh),
      k_(k),
      problem_(std::move(problem)),
      element_(k),
      blocks_(assemble_blocks(k)),
      face_rule_(gauss_legendre(k + 2)),
      face_tests_(test_space(TestSpaceKind::kFace, k)),
      x_tests_(test_space(TestSpaceKind::kCellX, k)),
      y_tests_(test_space(TestSpaceKind::kCellY, k)) {
  if (!problem_.velocity) throw std::invalid_argument("InductionSolver: velocity field is required");
  const QuadratureRule1D& q = face_rule_;
  const int nq = q.size();
  vface_from_lower_ = element_.tabulate(points_on_line(q, 1.0, std::nullopt));
  vface_from_upper_ = element_.tabulate(points_on_line(q, 0.0, std::nullopt));
  hface_from_lower_ = element_.tabulate(points_on_line(q, std::nullopt, 1.0));
  hface_from_upper_ = element_.tabulate(points_on_line(q, std::nullopt, 0.0));

  std::vector<std::array<double, 2>> cell_points;
  for (int b = 0; b < nq; ++b) {
    for (int a = 0; a < nq; ++a) {
      cell_points.push_back({q.points[a], q.points[b]});
      cell_weights_.push_back(q.weights[a] * q.weights[b]);
    }
  }
  cell_table_ = element_.tabulate(cell_points);
  const int np = static_cast<int>(cell_points.size());

  const LagrangeBasis1D& fb = element_.face_basis();
  for (int j = 0; j <= k; ++j) {
    for (int a = 0; a < nq; ++a) trace_at_q_.push_back(fb.value(j, q.points[a]));
    trace_at_0_.push_back(fb.value(j, 0.0));
    trace_at_1_.push_back(fb.value(j, 1.0));
  }
  for (int m = 0; m <= k; ++m) {
    for (int a = 0; a < nq; ++a) {
      face_test_q_.push_back(face_tests_.value(m, q.points[a] - 0.5));
      face_dtest_q_.push_back(face_tests_.d_ds(m, q.points[a] - 0.5));
    }
    face_test_0_.push_back(face_tests_.value(m, -0.5));
    face_test_1_.push_back(face_tests_.value(m, 0.5));
  }
  for (int m = 0; m < x_tests_.size(); ++m) {
    for (int p = 0; p < np; ++p) {
      const double s = cell_points[p][0] - 0.5;
      const double t = cell_points[p][1] - 0.5;
      xtest_cell_.push_back(x_tests_.value(m, s, t));
      xtest_deta_cell_.push_back(x_tests_.d_dt(m, s, t));
      ytest_cell_.push_back(y_tests_.value(m, s, t));
      ytest_dxi_cell_.push_back(y_tests_.d_ds(m, s, t));
    }
    for (int a = 0; a < nq; ++a) {
      const double s = q.points[a] - 0.5;
      xtest_bottom_.push_back(x_tests_.value(m, s, -0.5));
      xtest_top_.push_back(x_tests_.value(m, s, 0.5));
      ytest_left_.push_back(y_tests_.value(m, -0.5, s));
      ytest_right_.push_back(y_tests_.value(m, 0.5, s));
    }
  }
}

RHSBuffers InductionSolver::make_buffers() const {
  const std::size_t nq = static_cast<std::size_t>(face_rule_.size());
  const std::size_t nf = static_cast<std::size_t>(k_ + 1);
  const std::size_t ni = static_cast<std::size_t>(k_ * (k_ + 1));
  RHSBuffers b;
  b.vertex_flux.assign(mesh_.num_vertices(), 0.0);
  b.vertical_flux.assign(nq * mesh_.num_vertical_faces(), 0.0);
  b.horizontal_flux.assign(nq * mesh_.num_horizontal_faces(), 0.0);
  b.vertical_rhs.assign(nf * mesh_.num_vertical_faces(), 0.0);
  b.horizontal_rhs.assign(nf * mesh_.num_horizontal_faces(), 0.0);
  b.cell_rhs_x.assign(ni * mesh_.num_cells(), 0.0);
  b.cell_rhs_y.assign(ni * mesh_.num_cells(), 0.0);
  b.cell_dofs.assign(static_cast<std::size_t>(element_.num_dofs()) * mesh_.num_cells(), 0.0);
  return b;
}

void InductionSolver::sample_velocity(double t, VelocitySamples& out) const {
  const auto& v = problem_.velocity;
  const QuadratureRule1D& q = face_rule_;
  const int nq = q.size();
  out.vertex.resize(mesh_.num_vertices());
  for (int id = 0; id < mesh_.num_vertices(); ++id) {
    const VertexRef vx = mesh_.vertex(id);
    out.vertex[id] = v(vx.x, vx.y, t);
  }
  out.vertical.resize(static_cast<std::size_t>(nq) * mesh_.num_vertical_faces());
  for (int id = 0; id < mesh_.num_vertical_faces(); ++id) {
    const FaceRef f = mesh_.vertical_face(id);
    const double x = mesh_.x_min() + f.i * mesh_.dx();
    for (int a = 0; a < nq; ++a) {
      out.vertical[id * nq + a] = v(x, mesh_.y_min() + (f.j + q.points[a]) * mesh_.dy(), t);
    }
  }
  out.horizontal.resize(static_cast<std::size_t>(nq) * mesh_.num_horizontal_faces());
  for (int id = 0; id < mesh_.num_horizontal_faces(); ++id) {
    const FaceRef f = mesh_.horizontal_face(id);
    const double y = mesh_.y_min() + f.j * mesh_.dy();
    for (int a = 0; a < nq; ++a) {
      out.horizontal[id * nq + a] = v(mesh_.x_min() + (f.i + q.points[a]) * mesh_.dx(), y, t);
    }
  }
  const int np = nq * nq;
  out.cell.resize(static_cast<std::size_t>(np) * mesh_.num_cells());
  for (int c = 0; c < mesh_.num_cells(); ++c) {
    for (int b = 0; b < nq; ++b) {
      for (int a = 0; a < nq; ++a) {
        out.cell[c * np + b * nq + a] =
            v(mesh_.cell_x0(c) + q.points[a] * mesh_.dx(), mesh_.cell_y0(c) + q.points[b] * mesh_.dy(), t);
      }
    }
  }
}

const InductionSolver::VelocitySamples& InductionSolver::velocity_at(double t) const {
  if (!velocity_valid_ || (!problem_.steady_velocity && velocity_time_ != t)) {
    sample_velocity(t, velocity_cache_);
    velocity_time_ = t;
    velocity_valid_ = true;
  }
  return velocity_cache_;
}

void InductionSolver::residual_faces(const FieldState& state, double t, RHSBuffers& buf) const {
  const VelocitySamples& vel = velocity_at(t);
  const QuadratureRule1D& q = face_rule_;
  const int nq = q.size();
  const int nf = k_ + 1;
  const int nd = element_.num_dofs();
  const int nx = mesh_.nx();
  const int ny = mesh_.ny();
  const double dx = mesh_.dx();
  const double dy = mesh_.dy();

  for (int c = 0; c < mesh_.num_cells(); ++c) {
    state.gather(c, std::span<double>(buf.cell_dofs.data() + static_cast<std::size_t>(c) * nd, nd));
  }
  auto local = [&](int c) { return std::span<const double>(buf.cell_dofs.data() + static_cast<std::size_t>(c) * nd, nd); };
  auto boundary_value = [&](double x, double y) -> std::optional<Vec2> {
    if (!problem_.boundary) return std::nullopt;
    return problem_.boundary(x, y, t);
  };

  // Vertex fluxes from the face traces meeting at each vertex.
  for (int id = 0; id < mesh_.num_vertices(); ++id) {
    const VertexRef vx = mesh_.vertex(id);
    const int i = vx.i;
    const int j = vx.j;
    VertexStates s;
    if (j < ny) s.bx_up = dot(state.vertical_face(mesh_.vertical_face_id(i, j)).data(), trace_at_0_.data(), nf);
    if (j > 0) s.bx_down = dot(state.vertical_face(mesh_.vertical_face_id(i, j - 1)).data(), trace_at_1_.data(), nf);
    if (i < nx) s.by_right = dot(state.horizontal_face(mesh_.horizontal_face_id(i, j)).data(), trace_at_0_.data(), nf);
    if (i > 0) s.by_left = dot(state.horizontal_face(mesh_.horizontal_face_id(i - 1, j)).data(), trace_at_1_.data(), nf);
    const Vec2 v = vel.vertex[id];
    const BoundarySides sides{i == 0, i == nx, j == 0, j == ny};
    if (!(sides.left || sides.right || sides.bottom || sides.top)) {
      buf.vertex_flux[id] = vertex_flux(s, v);
      continue;
    }
    const QuadrantStates full = quadrant_states(s);
    std::array<std::optional<Vec2>, 4> present;
    for (int qd = 0; qd < 4; ++qd) {
      if (vx.cells[qd] != kNoCell) present[qd] = full[qd];
    }
    const QuadrantStates completed = complete_boundary_vertex(present, sides, v, boundary_value(vx.x, vx.y));
    buf.vertex_flux[id] = vertex_flux_four_state(completed, v);
  }

  // Vertical faces: B_x is normal, B_y tangential.
  for (int id = 0; id < mesh_.num_vertical_faces(); ++id) {
    const FaceRef f = mesh_.vertical_face(id);
    const auto dofs = state.vertical_face(id);
    const double x = mesh_.x_min() + f.i * dx;
    double* flux = buf.vertical_flux.data() + static_cast<std::size_t>(id) * nq;
    for (int a = 0; a < nq; ++a) {
      double normal = 0.0;
      for (int jj = 0; jj < nf; ++jj) normal += dofs[jj] * trace_at_q_[jj * nq + a];
      const Vec2 v = vel.vertical[id * nq + a];
      FaceTraceStates s;
      if (f.lower != kNoCell && f.upper != kNoCell) {
        s = {normal, vface_from_lower_.eval_by(a, local(f.lower)), vface_from_upper_.eval_by(a, local(f.upper))};
      } else {
        const bool interior_is_lower = f.upper == kNoCell;
        const double tangential = interior_is_lower ? vface_from_lower_.eval_by(a, local(f.lower))
                                                    : vface_from_upper_.eval_by(a, local(f.upper));
        s = complete_boundary_face(normal, tangential, interior_is_lower, Orientation::kVertical, v,
                                   boundary_value(x, mesh_.y_min() + (f.j + q.points[a]) * dy));
      }
      flux[a] = face_flux(s, v, Orientation::kVertical);
    }
    const double e_bottom = buf.vertex_flux[mesh_.vertex_id(f.i, f.j)];
    const double e_top = buf.vertex_flux[mesh_.vertex_id(f.i, f.j + 1)];
    double* rhs = buf.vertical_rhs.data() + static_cast<std::size_t>(id) * nf;
    for (int m = 0; m < nf; ++m) {
      double r = 0.0;
      for (int a = 0; a < nq; ++a) r += q.weights[a] * flux[a] * face_dtest_q_[m * nq + a];
      rhs[m] = r - (e_top * face_test_1_[m] - e_bottom * face_test_0_[m]);
    }
    if (problem_.source) {
      for (int a = 0; a < nq; ++a) {
        const double mx = problem_.source(x, mesh_.y_min() + (f.j + q.points[a]) * dy, t).x;
        for (int m = 0; m < nf; ++m) rhs[m] -= dy * q.weights[a] * mx * face_test_q_[m * nq + a];
      }
    }
  }

  // Horizontal faces: B_y is normal, B_x tangential.
  for (int id = 0; id < mesh_.num_horizontal_faces(); ++id) {
    const FaceRef f = mesh_.horizontal_face(id);
    const auto dofs = state.horizontal_face(id);
    const double y = mesh_.y_min() + f.j * dy;
    double* flux = buf.horizontal_flux.data() + static_cast<std::size_t>(id) * nq;
    for (int a = 0; a < nq; ++a) {
      double normal = 0.0;
      for (int ii = 0; ii < nf; ++ii) normal += dofs[ii] * trace_at_q_[ii * nq + a];
      const Vec2 v = vel.horizontal[id * nq + a];
      FaceTraceStates s;
      if (f.lower != kNoCell && f.upper != kNoCell) {
        s = {normal, hface_from_lower_.eval_bx(a, local(f.lower)), hface_from_upper_.eval_bx(a, local(f.upper))};
      } else {
        const bool interior_is_lower = f.upper == kNoCell;
        const double tangential = interior_is_lower ? hface_from_lower_.eval_bx(a, local(f.lower))
                                                    : hface_from_upper_.eval_bx(a, local(f.upper));
        s = complete_boundary_face(normal, tangential, interior_is_lower, Orientation::kHorizontal, v,
                                   boundary_value(mesh_.x_min() + (f.i + q.points[a]) * dx, y));
      }
      flux[a] = face_flux(s, v, Orientation::kHorizontal);
    }
    const double e_left = buf.vertex_flux[mesh_.vertex_id(f.i, f.j)];
    const double e_right = buf.vertex_flux[mesh_.vertex_id(f.i + 1, f.j)];
    double* rhs = buf.horizontal_rhs.data() + static_cast<std::size_t>(id) * nf;
    for (int m = 0; m < nf; ++m) {
      double r = 0.0;
      for (int a = 0; a < nq; ++a) r += q.weights[a] * flux[a] * face_dtest_q_[m * nq + a];
      rhs[m] = -r + (e_right * face_test_1_[m] - e_left * face_test_0_[m]);
    }
    if (problem_.source) {
      for (int a = 0; a < nq; ++a) {
        const double my = problem_.source(mesh_.x_min() + (f.i + q.points[a]) * dx, y, t).y;
        for (int m = 0; m < nf; ++m) rhs[m] -= dx * q.weights[a] * my * face_test_q_[m * nq + a];
      }
    }
  }
}

void InductionSolver::residual_cells(const FieldState&, double t, RHSBuffers& buf) const {
  const int ni = k_ * (k_ + 1);
  if (ni == 0) return;
  const VelocitySamples& vel = velocity_at(t);
  const QuadratureRule1D& q = face_rule_;
  const int nq = q.size();
  const int np = nq * nq;
  const int nd = element_.num_dofs();
  const double dx = mesh_.dx();
  const double dy = mesh_.dy();
  std::vector<double> e(np);
  std::vector<Vec2> m_src(problem_.source ? np : 0);

  for (int c = 0; c < mesh_.num_cells(); ++c) {
    const std::span<const double> local(buf.cell_dofs.data() + static_cast<std::size_t>(c) * nd, nd);
    for (int p = 0; p < np; ++p) {
      const Vec2 b{cell_table_.eval_bx(p, local), cell_table_.eval_by(p, local)};
      e[p] = electric_field(b, vel.cell[c * np + p]);
    }
    if (problem_.source) {
      for (int bq = 0; bq < nq; ++bq) {
        for (int a = 0; a < nq; ++a) {
          m_src[bq * nq + a] = problem_.source(mesh_.cell_x0(c) + q.points[a] * dx, mesh_.cell_y0(c) + q.points[bq] * dy, t);
        }
      }
    }
    const CellFaces faces = mesh_.cell_faces(c);
    const double* flux_left = buf.vertical_flux.data() + static_cast<std::size_t>(faces.left.id) * nq;
    const double* flux_right = buf.vertical_flux.data() + static_cast<std::size_t>(faces.right.id) * nq;
    const double* flux_bottom = buf.horizontal_flux.data() + static_cast<std::size_t>(faces.bottom.id) * nq;
    const double* flux_top = buf.horizontal_flux.data() + static_cast<std::size_t>(faces.top.id) * nq;
    double* rx = buf.cell_rhs_x.data() + static_cast<std::size_t>(c) * ni;
    double* ry = buf.cell_rhs_y.data() + static_cast<std::size_t>(c) * ni;

    for (int m = 0; m < ni; ++m) {
      double vol_x = 0.0;
      double vol_y = 0.0;
      for (int p = 0; p < np; ++p) {
        vol_x += cell_weights_[p] * e[p] * xtest_deta_cell_[m * np + p];
        vol_y += cell_weights_[p] * e[p] * ytest_dxi_cell_[m * np + p];
      }
      double top = 0.0, bottom = 0.0, left = 0.0, right = 0.0;
      for (int a = 0; a < nq; ++a) {
        top += q.weights[a] * flux_top[a] * xtest_top_[m * nq + a];
        bottom += q.weights[a] * flux_bottom[a] * xtest_bottom_[m * nq + a];
        left += q.weights[a] * flux_left[a] * ytest_left_[m * nq + a];
        right += q.weights[a] * flux_right[a] * ytest_right_[m * nq + a];
      }
      rx[m] = dx * vol_x - dx * (top - bottom);
      ry[m] = -dy * vol_y + dy * (right - left);
      if (problem_.source) {
        double sx = 0.0, sy = 0.0;
        for (int p = 0; p < np; ++p) {
          sx += cell_weights_[p] * m_src[p].x * xtest_cell_[m * np + p];
          sy += cell_weights_[p] * m_src[p].y * ytest_cell_[m * np + p];
        }
        rx[m] -= dx * dy * sx;
        ry[m] -= dx * dy * sy;
      }
    }
  }
}

void InductionSolver::compute_rates(const FieldState& state, double t, FieldState& rates) const {
  thread_local RHSBuffers buf;
  if (buf.vertex_flux.size() != static_cast<std::size_t>(mesh_.num_vertices()) ||
      buf.cell_dofs.size() != static_cast<std::size_t>(element_.num_dofs()) * mesh_.num_cells() ||
      buf.vertical_flux.size() != static_cast<std::size_t>(face_rule_.size()) * mesh_.num_vertical_faces()) {
    buf = make_buffers();
  }
  residual_faces(state, t, buf);
  residual_cells(state, t, buf);

  const int nf = k_ + 1;
  const int ni = k_ * (k_ + 1);
  auto face_solve = [nf](const Eigen::MatrixXd& inv, const double* rhs, double scale, std::span<double> out) {
    for (int i = 0; i < nf; ++i) {
      double sum = 0.0;
      for (int m = 0; m < nf; ++m) sum += inv(i, m) * rhs[m];
      out[i] = sum * scale;
    }
  };
  for (int id = 0; id < mesh_.num_vertical_faces(); ++id) {
    face_solve(blocks_.mx_inv, buf.vertical_rhs.data() + static_cast<std::size_t>(id) * nf, 1.0 / mesh_.dy(),
               rates.vertical_face(id));
  }
  for (int id = 0; id < mesh_.num_horizontal_faces(); ++id) {
    face_solve(blocks_.my_inv, buf.horizontal_rhs.data() + static_cast<std::size_t>(id) * nf, 1.0 / mesh_.dx(),
               rates.horizontal_face(id));
  }
  if (ni == 0) return;
  for (int c = 0; c < mesh_.num_cells(); ++c) {
    const CellFaces faces = mesh_.cell_faces(c);
    const std::span<const double> rhs_x(buf.cell_rhs_x.data() + static_cast<std::size_t>(c) * ni, ni);
    const std::span<const double> rhs_y(buf.cell_rhs_y.data() + static_cast<std::size_t>(c) * ni, ni);
    const FieldState& r = rates;
    solve_rates_into(blocks_, rhs_x, rhs_y, r.face(faces.left), r.face(faces.right), r.face(faces.bottom),
                     r.face(faces.top), mesh_.dx(), mesh_.dy(), rates.interior_x(c), rates.interior_y(c));
  }
}

FieldState InductionSolver::compute_rates(const FieldState& state, double t) const {
  FieldState rates(mesh_, k_);
  compute_rates(state, t, rates);
  return rates;
}

double InductionSolver::cfl_dt(double cfl, double t, double dt_max) const {
  const VelocitySamples& vel = velocity_at(t);
  double max_rate = 0.0;
  auto update = [&](const std::vector<Vec2>& samples) {
    for (const Vec2& v : samples) max_rate = std::max(max_rate, std::abs(v.x) / mesh_.dx() + std::abs(v.y) / mesh_.dy());
  };
  update(vel.vertex);
  update(vel.vertical);
  update(vel.horizontal);
  if (max_rate == 0.0) return dt_max;
  return cfl / ((2 * k_ + 1) * max_rate);
}

void InductionSolver::step_ssp_rk3(FieldState& state, double t, double dt) const {
  ssp_rk3_step(state, t, dt, [this](const FieldState& u, double time, FieldState& out) { compute_rates(u, time, out); });
  for (double v : state.values()) {
    if (!std::isfinite(v)) throw NonFiniteError("non-finite value in solution");
  }
}

InductionProblem make_problem(const Scenario& scenario) {
  InductionProblem p;
  p.velocity = scenario.velocity;
  p.source = scenario.source;
  p.boundary = scenario.boundary;
  // None of the built-in velocity fields depends on time.
  p.steady_velocity = true;
  return p;
}

RunResult run(const Scenario& scenario, const CartesianMesh& mesh, int k, const TimeControls& controls,
              const StepObserver& observer) {
  RunResult result{project_field(scenario.initial, mesh, k), {}, 0, 0.0};
  if (observer) observer(result.state, 0, 0.0);
  result.history.push_back({0, 0.0, 0.0, l2_div_norm(result.state)});
  if (!scenario.evolve || controls.t_final <= 0.0) return result;

  const InductionSolver solver(mesh, k, make_problem(scenario));
  double t = 0.0;
  int step = 0;
  while (t < controls.t_final) {
    double dt = solver.cfl_dt(controls.cfl, t, controls.dt_max);
    bool last = false;
    if (t + dt >= controls.t_final * (1.0 - 1e-14)) {
      dt = controls.t_final - t;
      last = true;
    }
    ++step;
    try {
      solver.step_ssp_rk3(result.state, t, dt);
    } catch (const NonFiniteError&) {
      throw NonFiniteError("non-finite value in solution at step " + std::to_string(step) + " (t = " +
                           std::to_string(t) + ")");
    }
    t = last ? controls.t_final : t + dt;
    StepRecord rec{step, t, dt, -1.0};
    if (last || (controls.div_every > 0 && step % controls.div_every == 0)) rec.div_norm = l2_div_norm(result.state);
    result.history.push_back(rec);
    if (observer) observer(result.state, step, t);
    if (last) break;
  }
  result.steps = step;
  result.final_time = t;
  return result;
}

}  // namespace rtdg
