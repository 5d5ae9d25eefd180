#include "rtdg/projection.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rtdg {

namespace {

// Reference-coordinate evaluators of the field to be projected.
struct ProjectionSource {
  std::function<double(const FaceRef&, double)> vertical_normal;    // B_x along a vertical face
  std::function<double(const FaceRef&, double)> horizontal_normal;  // B_y along a horizontal face
  std::function<Vec2(int, double, double)> cell_value;
};

FieldState project_moments(const ProjectionSource& src, const CartesianMesh& mesh, int k) {
  const CellMassBlocks blocks = assemble_blocks(k);
  const TestSpace face_tests = test_space(TestSpaceKind::kFace, k);
  const TestSpace x_tests = test_space(TestSpaceKind::kCellX, k);
  const TestSpace y_tests = test_space(TestSpaceKind::kCellY, k);
  const QuadratureRule1D q = gauss_legendre(k + 3);
  const int nf = k + 1;
  const int ni = k * (k + 1);
  FieldState state(mesh, k);
  std::vector<double> rhs(nf);

  for (int id = 0; id < mesh.num_vertical_faces(); ++id) {
    const FaceRef f = mesh.vertical_face(id);
    std::fill(rhs.begin(), rhs.end(), 0.0);
    for (int a = 0; a < q.size(); ++a) {
      const double bx = src.vertical_normal(f, q.points[a]);
      for (int m = 0; m < nf; ++m) rhs[m] += mesh.dy() * q.weights[a] * bx * face_tests.value(m, q.points[a] - 0.5);
    }
    const auto dofs = solve_face_rates(blocks, Orientation::kVertical, rhs, mesh.dy());
    std::copy(dofs.begin(), dofs.end(), state.vertical_face(id).begin());
  }
  for (int id = 0; id < mesh.num_horizontal_faces(); ++id) {
    const FaceRef f = mesh.horizontal_face(id);
    std::fill(rhs.begin(), rhs.end(), 0.0);
    for (int a = 0; a < q.size(); ++a) {
      const double by = src.horizontal_normal(f, q.points[a]);
      for (int m = 0; m < nf; ++m) rhs[m] += mesh.dx() * q.weights[a] * by * face_tests.value(m, q.points[a] - 0.5);
    }
    const auto dofs = solve_face_rates(blocks, Orientation::kHorizontal, rhs, mesh.dx());
    std::copy(dofs.begin(), dofs.end(), state.horizontal_face(id).begin());
  }
  if (ni == 0) return state;

  std::vector<double> rx(ni), ry(ni);
  const double area = mesh.cell_area();
  for (int c = 0; c < mesh.num_cells(); ++c) {
    std::fill(rx.begin(), rx.end(), 0.0);
    std::fill(ry.begin(), ry.end(), 0.0);
    for (int a = 0; a < q.size(); ++a) {
      for (int b = 0; b < q.size(); ++b) {
        const double xi = q.points[a];
        const double eta = q.points[b];
        const double w = area * q.weights[a] * q.weights[b];
        const Vec2 v = src.cell_value(c, xi, eta);
        for (int m = 0; m < ni; ++m) {
          rx[m] += w * v.x * x_tests.value(m, xi - 0.5, eta - 0.5);
          ry[m] += w * v.y * y_tests.value(m, xi - 0.5, eta - 0.5);
        }
      }
    }
    const CellFaces faces = mesh.cell_faces(c);
    solve_rates_into(blocks, rx, ry, state.face(faces.left), state.face(faces.right), state.face(faces.bottom),
                     state.face(faces.top), mesh.dx(), mesh.dy(), state.interior_x(c), state.interior_y(c));
  }
  return state;
}

std::vector<double> equispaced_nodes(int n) {
  std::vector<double> nodes(n);
  for (int a = 0; a < n; ++a) nodes[a] = static_cast<double>(a) / (n - 1);
  return nodes;
}

// Interpolant of Phi in Q_{k+1,k+1} fixed by vertex values, edge moments
// against P_{k-1} and cell moments against Q_{k-1,k-1}. Its curl is the
// RT_k moment projection of curl(Phi), and it is stored as values at
// equispaced nodes.
class StreamInterpolant {
 public:
  StreamInterpolant(int k, const StaticScalarField& stream, const CartesianMesh& mesh)
      : k_(k), stream_(stream), mesh_(mesh), basis_(equispaced_nodes(k + 2)), rule_(gauss_legendre(k + 3)) {
    const int n = k + 2;
    // Rows: value at 0, moments m = 0..k-1, value at 1.
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int c = 0; c < n; ++c) {
      a(0, c) = basis_.value(c, 0.0);
      a(n - 1, c) = basis_.value(c, 1.0);
      for (int m = 0; m < k; ++m) {
        for (int q = 0; q < rule_.size(); ++q) {
          a(1 + m, c) += rule_.weights[q] * basis_.value(c, rule_.points[q]) * modal_value(m, rule_.points[q] - 0.5);
        }
      }
    }
    edge_lu_.compute(a);
    if (k > 0) {
      Eigen::MatrixXd g = Eigen::MatrixXd::Zero(k, n);  // g(m, c) = int L_c p_m
      for (int m = 0; m < k; ++m) {
        for (int c = 0; c < n; ++c) g(m, c) = a(1 + m, c);
      }
      edge_moments_ = g;
      Eigen::MatrixXd inner(k * k, k * k);
      for (int mb = 0; mb < k; ++mb) {
        for (int ma = 0; ma < k; ++ma) {
          for (int b = 0; b < k; ++b) {
            for (int aa = 0; aa < k; ++aa) inner(mb * k + ma, b * k + aa) = g(ma, aa + 1) * g(mb, b + 1);
          }
        }
      }
      inner_lu_.compute(inner);
    }
  }

  int size() const { return k_ + 2; }
  const LagrangeBasis1D& basis() const { return basis_; }

  // Node values of Phi_h along the segment from (x0, y0) to (x0 + lx, y0 + ly).
  std::vector<double> edge(double x0, double y0, double lx, double ly) const {
    const int n = k_ + 2;
    Eigen::VectorXd f(n);
    f(0) = stream_(x0, y0);
    f(n - 1) = stream_(x0 + lx, y0 + ly);
    for (int m = 0; m < k_; ++m) {
      double sum = 0.0;
      for (int q = 0; q < rule_.size(); ++q) {
        const double s = rule_.points[q];
        sum += rule_.weights[q] * stream_(x0 + s * lx, y0 + s * ly) * modal_value(m, s - 0.5);
      }
      f(1 + m) = sum;
    }
    const Eigen::VectorXd v = edge_lu_.solve(f);
    return {v.data(), v.data() + n};
  }

  // All (k+2)^2 node values on a cell, a (x) fastest.
  std::vector<double> cell(int c) const {
    const int n = k_ + 2;
    const double x0 = mesh_.cell_x0(c);
    const double y0 = mesh_.cell_y0(c);
    const double dx = mesh_.dx();
    const double dy = mesh_.dy();
    std::vector<double> phi(static_cast<std::size_t>(n * n), 0.0);
    const auto bottom = edge(x0, y0, dx, 0.0);
    const auto top = edge(x0, y0 + dy, dx, 0.0);
    const auto left = edge(x0, y0, 0.0, dy);
    const auto right = edge(x0 + dx, y0, 0.0, dy);
    for (int a = 0; a < n; ++a) {
      phi[a] = bottom[a];
      phi[(n - 1) * n + a] = top[a];
      phi[a * n] = left[a];
      phi[a * n + n - 1] = right[a];
    }
    if (k_ == 0) return phi;
    const int k = k_;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k * k);
    for (int qb = 0; qb < rule_.size(); ++qb) {
      for (int qa = 0; qa < rule_.size(); ++qa) {
        const double xi = rule_.points[qa];
        const double eta = rule_.points[qb];
        const double w = rule_.weights[qa] * rule_.weights[qb];
        const double value = stream_(x0 + xi * dx, y0 + eta * dy);
        for (int mb = 0; mb < k; ++mb) {
          for (int ma = 0; ma < k; ++ma) {
            rhs(mb * k + ma) += w * value * modal_value(ma, xi - 0.5) * modal_value(mb, eta - 0.5);
          }
        }
      }
    }
    // Remove the boundary node contributions; the basis is a tensor product.
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const bool interior = a > 0 && a < n - 1 && b > 0 && b < n - 1;
        if (interior) continue;
        for (int mb = 0; mb < k; ++mb) {
          for (int ma = 0; ma < k; ++ma) {
            rhs(mb * k + ma) -= phi[b * n + a] * edge_moments_(ma, a) * edge_moments_(mb, b);
          }
        }
      }
    }
    const Eigen::VectorXd inner = inner_lu_.solve(rhs);
    for (int b = 0; b < k; ++b) {
      for (int a = 0; a < k; ++a) phi[(b + 1) * n + a + 1] = inner(b * k + a);
    }
    return phi;
  }

 private:
  int k_;
  const StaticScalarField& stream_;
  const CartesianMesh& mesh_;
  LagrangeBasis1D basis_;
  QuadratureRule1D rule_;
  Eigen::PartialPivLU<Eigen::MatrixXd> edge_lu_;
  Eigen::PartialPivLU<Eigen::MatrixXd> inner_lu_;
  Eigen::MatrixXd edge_moments_;
};

}  // namespace

FieldState project(const AnalyticField& field, const CartesianMesh& mesh, int k) {
  if (!field.value) throw std::invalid_argument("project: field has no evaluator");
  ProjectionSource src;
  src.vertical_normal = [&](const FaceRef& f, double eta) {
    return field.value(mesh.x_min() + f.i * mesh.dx(), mesh.y_min() + (f.j + eta) * mesh.dy()).x;
  };
  src.horizontal_normal = [&](const FaceRef& f, double xi) {
    return field.value(mesh.x_min() + (f.i + xi) * mesh.dx(), mesh.y_min() + f.j * mesh.dy()).y;
  };
  src.cell_value = [&](int c, double xi, double eta) {
    return field.value(mesh.cell_x0(c) + xi * mesh.dx(), mesh.cell_y0(c) + eta * mesh.dy());
  };
  return project_moments(src, mesh, k);
}

FieldState project_divfree(const StaticScalarField& stream, const CartesianMesh& mesh, int k) {
  if (!stream) throw std::invalid_argument("project_divfree: no stream function");
  const StreamInterpolant interp(k, stream, mesh);
  const LagrangeBasis1D& basis = interp.basis();
  const int n = interp.size();
  const double dx = mesh.dx();
  const double dy = mesh.dy();

  ProjectionSource src;
  // The normal component of curl(Phi_h) on a face is the tangential derivative
  // of Phi_h, which depends only on data of that face.
  int cached_face = -1;
  Orientation cached_orientation = Orientation::kVertical;
  std::vector<double> edge;
  auto face_nodes = [&](const FaceRef& f) -> const std::vector<double>& {
    if (f.id != cached_face || f.orientation != cached_orientation) {
      const double x = mesh.x_min() + f.i * dx;
      const double y = mesh.y_min() + f.j * dy;
      edge = f.orientation == Orientation::kVertical ? interp.edge(x, y, 0.0, dy) : interp.edge(x, y, dx, 0.0);
      cached_face = f.id;
      cached_orientation = f.orientation;
    }
    return edge;
  };
  src.vertical_normal = [&](const FaceRef& f, double eta) {
    const auto& nodes = face_nodes(f);
    double sum = 0.0;
    for (int b = 0; b < n; ++b) sum += nodes[b] * basis.derivative(b, eta);
    return sum / dy;
  };
  src.horizontal_normal = [&](const FaceRef& f, double xi) {
    const auto& nodes = face_nodes(f);
    double sum = 0.0;
    for (int a = 0; a < n; ++a) sum += nodes[a] * basis.derivative(a, xi);
    return -sum / dx;
  };

  int cached_cell = -1;
  std::vector<double> phi;
  src.cell_value = [&](int c, double xi, double eta) {
    if (c != cached_cell) {
      phi = interp.cell(c);
      cached_cell = c;
    }
    Vec2 v;
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        v.x += phi[b * n + a] * basis.value(a, xi) * basis.derivative(b, eta) / dy;
        v.y -= phi[b * n + a] * basis.derivative(a, xi) * basis.value(b, eta) / dx;
      }
    }
    return v;
  };
  return project_moments(src, mesh, k);
}

FieldState project_field(const AnalyticField& field, const CartesianMesh& mesh, int k) {
  if (field.stream) return project_divfree(field.stream, mesh, k);
  return project(field, mesh, k);
}

double divergence_moments(const FieldState& state, int cell, ModalTerm phi) {
  const int k = state.degree();
  if (phi.s_degree > k || phi.t_degree > k) {
    throw std::invalid_argument("divergence_moments: test function not in Q_{k,k}");
  }
  const RTElement element(k);
  const auto local = state.gather(cell);
  const QuadratureRule1D q = gauss_legendre(k + 2);
  const CartesianMesh& mesh = state.mesh();
  double sum = 0.0;
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) {
      const double xi = q.points[a];
      const double eta = q.points[b];
      const double test = modal_value(phi.s_degree, xi - 0.5) * modal_value(phi.t_degree, eta - 0.5);
      sum += q.weights[a] * q.weights[b] * test * element.eval_div(local, xi, eta, mesh.dx(), mesh.dy());
    }
  }
  return sum * mesh.cell_area();
}

}  // namespace rtdg
