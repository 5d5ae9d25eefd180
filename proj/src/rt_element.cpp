#include "rtdg/rt_element.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rtdg {

namespace {

std::vector<double> extended_nodes(int k) {
  std::vector<double> nodes{0.0};
  if (k > 0) {
    const QuadratureRule1D interior = gauss_legendre(k);
    nodes.insert(nodes.end(), interior.points.begin(), interior.points.end());
  }
  nodes.push_back(1.0);
  return nodes;
}

int check_degree(int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("RTElement: unsupported degree " + std::to_string(k));
  return k;
}

}  // namespace

double BasisTable::eval_div(int p, std::span<const double> local, double dx, double dy) const {
  const double* rx = dbx_dxi.data() + static_cast<std::size_t>(p) * num_dofs;
  const double* ry = dby_deta.data() + static_cast<std::size_t>(p) * num_dofs;
  double sx = 0.0;
  double sy = 0.0;
  for (int d = 0; d < num_dofs; ++d) {
    sx += rx[d] * local[d];
    sy += ry[d] * local[d];
  }
  return sx / dx + sy / dy;
}

RTElement::RTElement(int k)
    : k_(check_degree(k)), face_basis_(gauss_legendre(k + 1).points), edge_basis_(extended_nodes(k)) {
  for (int j = 0; j <= k; ++j) dofs_.push_back({Component::kX, 0, j});
  for (int j = 0; j <= k; ++j) dofs_.push_back({Component::kX, k + 1, j});
  for (int i = 0; i <= k; ++i) dofs_.push_back({Component::kY, i, 0});
  for (int i = 0; i <= k; ++i) dofs_.push_back({Component::kY, i, k + 1});
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) dofs_.push_back({Component::kX, i, j});
  }
  for (int j = 1; j <= k; ++j) {
    for (int i = 0; i <= k; ++i) dofs_.push_back({Component::kY, i, j});
  }
}

std::array<double, 2> RTElement::node(int dof) const {
  const LocalDof& d = dofs_.at(dof);
  if (d.component == Component::kX) return {edge_basis_.nodes()[d.i], face_basis_.nodes()[d.j]};
  return {face_basis_.nodes()[d.i], edge_basis_.nodes()[d.j]};
}

Vec2 RTElement::basis_value(int dof, double xi, double eta) const {
  const LocalDof& d = dofs_.at(dof);
  if (d.component == Component::kX) return {edge_basis_.value(d.i, xi) * face_basis_.value(d.j, eta), 0.0};
  return {0.0, face_basis_.value(d.i, xi) * edge_basis_.value(d.j, eta)};
}

double RTElement::basis_normal_derivative(int dof, double xi, double eta) const {
  const LocalDof& d = dofs_.at(dof);
  if (d.component == Component::kX) return edge_basis_.derivative(d.i, xi) * face_basis_.value(d.j, eta);
  return face_basis_.value(d.i, xi) * edge_basis_.derivative(d.j, eta);
}

Vec2 RTElement::eval_B(std::span<const double> local, double xi, double eta) const {
  Vec2 b;
  for (int d = 0; d < num_dofs(); ++d) b = b + local[d] * basis_value(d, xi, eta);
  return b;
}

double RTElement::eval_div(std::span<const double> local, double xi, double eta, double dx,
                           double dy) const {
  double sx = 0.0;
  double sy = 0.0;
  for (int d = 0; d < num_dofs(); ++d) {
    const double v = local[d] * basis_normal_derivative(d, xi, eta);
    if (dofs_[d].component == Component::kX) {
      sx += v;
    } else {
      sy += v;
    }
  }
  return sx / dx + sy / dy;
}

std::vector<double> RTElement::face_trace(std::span<const double> local, Side side) const {
  const auto first = local.begin() + face_offset(side);
  return {first, first + dofs_per_face()};
}

BasisTable RTElement::tabulate(const std::vector<std::array<double, 2>>& points) const {
  BasisTable t;
  t.num_points = static_cast<int>(points.size());
  t.num_dofs = num_dofs();
  const std::size_t n = points.size() * static_cast<std::size_t>(num_dofs());
  t.bx.assign(n, 0.0);
  t.by.assign(n, 0.0);
  t.dbx_dxi.assign(n, 0.0);
  t.dby_deta.assign(n, 0.0);
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto [xi, eta] = points[p];
    for (int d = 0; d < num_dofs(); ++d) {
      const std::size_t idx = p * num_dofs() + d;
      const Vec2 v = basis_value(d, xi, eta);
      const double dn = basis_normal_derivative(d, xi, eta);
      if (dofs_[d].component == Component::kX) {
        t.bx[idx] = v.x;
        t.dbx_dxi[idx] = dn;
      } else {
        t.by[idx] = v.y;
        t.dby_deta[idx] = dn;
      }
    }
  }
  return t;
}

FieldState::FieldState(const CartesianMesh& mesh, int k) : mesh_(mesh), k_(check_degree(k)) {
  const std::size_t nf = static_cast<std::size_t>(k + 1);
  const std::size_t ni = static_cast<std::size_t>(k * (k + 1));
  horizontal_offset_ = nf * mesh.num_vertical_faces();
  interior_x_offset_ = horizontal_offset_ + nf * mesh.num_horizontal_faces();
  interior_y_offset_ = interior_x_offset_ + ni * mesh.num_cells();
  values_.assign(interior_y_offset_ + ni * mesh.num_cells(), 0.0);
}

std::size_t FieldState::dof_count(const CartesianMesh& mesh, int k) {
  return static_cast<std::size_t>(k + 1) * mesh.num_faces() +
         static_cast<std::size_t>(2 * k * (k + 1)) * mesh.num_cells();
}

std::span<double> FieldState::vertical_face(int id) {
  return {values_.data() + static_cast<std::size_t>(id) * (k_ + 1), static_cast<std::size_t>(k_ + 1)};
}
std::span<const double> FieldState::vertical_face(int id) const {
  return {values_.data() + static_cast<std::size_t>(id) * (k_ + 1), static_cast<std::size_t>(k_ + 1)};
}
std::span<double> FieldState::horizontal_face(int id) {
  return {values_.data() + horizontal_offset_ + static_cast<std::size_t>(id) * (k_ + 1),
          static_cast<std::size_t>(k_ + 1)};
}
std::span<const double> FieldState::horizontal_face(int id) const {
  return {values_.data() + horizontal_offset_ + static_cast<std::size_t>(id) * (k_ + 1),
          static_cast<std::size_t>(k_ + 1)};
}
std::span<double> FieldState::face(const FaceRef& f) {
  return f.orientation == Orientation::kVertical ? vertical_face(f.id) : horizontal_face(f.id);
}
std::span<const double> FieldState::face(const FaceRef& f) const {
  return f.orientation == Orientation::kVertical ? vertical_face(f.id) : horizontal_face(f.id);
}
std::span<double> FieldState::interior_x(int cell) {
  const std::size_t ni = static_cast<std::size_t>(k_ * (k_ + 1));
  return {values_.data() + interior_x_offset_ + cell * ni, ni};
}
std::span<const double> FieldState::interior_x(int cell) const {
  const std::size_t ni = static_cast<std::size_t>(k_ * (k_ + 1));
  return {values_.data() + interior_x_offset_ + cell * ni, ni};
}
std::span<double> FieldState::interior_y(int cell) {
  const std::size_t ni = static_cast<std::size_t>(k_ * (k_ + 1));
  return {values_.data() + interior_y_offset_ + cell * ni, ni};
}
std::span<const double> FieldState::interior_y(int cell) const {
  const std::size_t ni = static_cast<std::size_t>(k_ * (k_ + 1));
  return {values_.data() + interior_y_offset_ + cell * ni, ni};
}

void FieldState::gather(int cell, std::span<double> local) const {
  const CellFaces faces = mesh_.cell_faces(cell);
  auto out = local.begin();
  for (const FaceRef* f : {&faces.left, &faces.right, &faces.bottom, &faces.top}) {
    const auto src = face(*f);
    out = std::copy(src.begin(), src.end(), out);
  }
  const auto ix = interior_x(cell);
  out = std::copy(ix.begin(), ix.end(), out);
  const auto iy = interior_y(cell);
  std::copy(iy.begin(), iy.end(), out);
}

std::vector<double> FieldState::gather(int cell) const {
  std::vector<double> local(static_cast<std::size_t>(2 * (k_ + 1) * (k_ + 2)));
  gather(cell, local);
  return local;
}

void FieldState::scatter(int cell, std::span<const double> local) {
  const CellFaces faces = mesh_.cell_faces(cell);
  auto in = local.begin();
  const std::size_t nf = static_cast<std::size_t>(k_ + 1);
  for (const FaceRef* f : {&faces.left, &faces.right, &faces.bottom, &faces.top}) {
    const auto dst = face(*f);
    std::copy(in, in + nf, dst.begin());
    in += nf;
  }
  const auto ix = interior_x(cell);
  std::copy(in, in + ix.size(), ix.begin());
  in += ix.size();
  const auto iy = interior_y(cell);
  std::copy(in, in + iy.size(), iy.begin());
}

}  // namespace rtdg
