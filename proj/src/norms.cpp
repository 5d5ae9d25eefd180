#include "rtdg/norms.hpp"

#include <cmath>
#include <numeric>

#include "rtdg/basis.hpp"

namespace rtdg {

namespace {

struct CellRule {
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;
};

CellRule error_rule(int k) {
  const QuadratureRule1D q = gauss_legendre(k + 3);
  CellRule r;
  for (int b = 0; b < q.size(); ++b) {
    for (int a = 0; a < q.size(); ++a) {
      r.points.push_back({q.points[a], q.points[b]});
      r.weights.push_back(q.weights[a] * q.weights[b]);
    }
  }
  return r;
}

// Integrates f(cell, point index, local dofs) over each cell.
template <class F>
std::vector<double> integrate_per_cell(const FieldState& state, const CellRule& rule, F&& f) {
  const CartesianMesh& mesh = state.mesh();
  const RTElement element(state.degree());
  std::vector<double> local(element.num_dofs());
  std::vector<double> out(mesh.num_cells(), 0.0);
  for (int c = 0; c < mesh.num_cells(); ++c) {
    state.gather(c, local);
    double sum = 0.0;
    for (std::size_t p = 0; p < rule.points.size(); ++p) sum += rule.weights[p] * f(c, static_cast<int>(p), local);
    out[c] = sum * mesh.cell_area();
  }
  return out;
}

double sqrt_sum(const std::vector<double>& v) { return std::sqrt(std::accumulate(v.begin(), v.end(), 0.0)); }

}  // namespace

std::vector<double> field_error_squared_per_cell(const FieldState& state, const VectorField& exact, double t) {
  const CellRule rule = error_rule(state.degree());
  const BasisTable table = RTElement(state.degree()).tabulate(rule.points);
  const CartesianMesh& mesh = state.mesh();
  return integrate_per_cell(state, rule, [&](int c, int p, const std::vector<double>& local) {
    const double x = mesh.cell_x0(c) + rule.points[p][0] * mesh.dx();
    const double y = mesh.cell_y0(c) + rule.points[p][1] * mesh.dy();
    const Vec2 e = exact(x, y, t);
    const double ex = table.eval_bx(p, local) - e.x;
    const double ey = table.eval_by(p, local) - e.y;
    return ex * ex + ey * ey;
  });
}

double l2_field_error(const FieldState& state, const VectorField& exact, double t) {
  return sqrt_sum(field_error_squared_per_cell(state, exact, t));
}

double l2_div_norm(const FieldState& state) {
  const CellRule rule = error_rule(state.degree());
  const BasisTable table = RTElement(state.degree()).tabulate(rule.points);
  const CartesianMesh& mesh = state.mesh();
  return sqrt_sum(integrate_per_cell(state, rule, [&](int, int p, const std::vector<double>& local) {
    const double d = table.eval_div(p, local, mesh.dx(), mesh.dy());
    return d * d;
  }));
}

double l2_div_error(const FieldState& state, const ScalarField& exact_div, double t) {
  const CellRule rule = error_rule(state.degree());
  const BasisTable table = RTElement(state.degree()).tabulate(rule.points);
  const CartesianMesh& mesh = state.mesh();
  return sqrt_sum(integrate_per_cell(state, rule, [&](int c, int p, const std::vector<double>& local) {
    const double x = mesh.cell_x0(c) + rule.points[p][0] * mesh.dx();
    const double y = mesh.cell_y0(c) + rule.points[p][1] * mesh.dy();
    const double d = table.eval_div(p, local, mesh.dx(), mesh.dy()) - exact_div(x, y, t);
    return d * d;
  }));
}

}  // namespace rtdg
