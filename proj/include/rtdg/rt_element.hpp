#pragma once

#include <array>
#include <span>
#include <vector>

#include "rtdg/basis.hpp"
#include "rtdg/mesh.hpp"
#include "rtdg/types.hpp"

namespace rtdg {

enum class Component { kX, kY };

/// A nodal degree of freedom: B_x dofs sit at (xi_i, hat xi_j) and B_y dofs at
/// (hat xi_i, xi_j), with xi the extended node set {0, interior Gauss, 1} and
/// hat xi the (k+1) Gauss nodes.
struct LocalDof {
  Component component = Component::kX;
  int i = 0;
  int j = 0;
};

/// Basis values of every local dof at a list of reference points, stored
/// point-major. B_x dofs contribute only to `bx`/`dbx_dxi`, B_y dofs only to
/// `by`/`dby_deta`.
struct BasisTable {
  int num_points = 0;
  int num_dofs = 0;
  std::vector<double> bx;
  std::vector<double> by;
  std::vector<double> dbx_dxi;
  std::vector<double> dby_deta;

  double eval_bx(int p, std::span<const double> local) const { return dot(bx, p, local); }
  double eval_by(int p, std::span<const double> local) const { return dot(by, p, local); }
  // Divergence on the reference cell; divide the parts by dx, dy for a physical cell.
  double eval_div(int p, std::span<const double> local, double dx = 1.0, double dy = 1.0) const;

 private:
  double dot(const std::vector<double>& table, int p, std::span<const double> local) const {
    const double* row = table.data() + static_cast<std::size_t>(p) * num_dofs;
    double sum = 0.0;
    for (int d = 0; d < num_dofs; ++d) sum += row[d] * local[d];
    return sum;
  }
};

/// Degree-k Raviart-Thomas element on the reference square [0,1]^2.
///
/// Local numbering: B_x on the left face, B_x on the right face, B_y on the
/// bottom face, B_y on the top face (k+1 each, ordered along the face), then
/// the k(k+1) interior B_x dofs and the k(k+1) interior B_y dofs. Interior
/// dofs are ordered with the face-parallel index running fastest.
class RTElement {
 public:
  explicit RTElement(int k);

  int degree() const { return k_; }
  int num_dofs() const { return 2 * (k_ + 1) * (k_ + 2); }
  int dofs_per_face() const { return k_ + 1; }
  int interior_dofs_per_component() const { return k_ * (k_ + 1); }

  int face_offset(Side side) const { return static_cast<int>(side) * (k_ + 1); }
  int interior_x_offset() const { return 4 * (k_ + 1); }
  int interior_y_offset() const { return 4 * (k_ + 1) + k_ * (k_ + 1); }

  const LagrangeBasis1D& face_basis() const { return face_basis_; }
  const LagrangeBasis1D& edge_basis() const { return edge_basis_; }
  const std::vector<LocalDof>& dofs() const { return dofs_; }

  /// Reference position of a dof's node.
  std::array<double, 2> node(int dof) const;

  /// Vector value of a single basis function.
  Vec2 basis_value(int dof, double xi, double eta) const;
  /// d(B_x)/d(xi) or d(B_y)/d(eta) of a single basis function (the other is zero).
  double basis_normal_derivative(int dof, double xi, double eta) const;

  Vec2 eval_B(std::span<const double> local, double xi, double eta) const;
  /// Physical divergence on a dx-by-dy cell.
  double eval_div(std::span<const double> local, double xi, double eta, double dx = 1.0,
                  double dy = 1.0) const;
  /// The k+1 nodal values of the normal component on one face.
  std::vector<double> face_trace(std::span<const double> local, Side side) const;

  BasisTable tabulate(const std::vector<std::array<double, 2>>& points) const;

 private:
  int k_;
  LagrangeBasis1D face_basis_;
  LagrangeBasis1D edge_basis_;
  std::vector<LocalDof> dofs_;
};

/// Global dof vector of an RT_k field on a mesh. Face dofs are stored once per
/// face so the normal component is single valued; interior dofs per cell.
///
/// Layout: vertical faces, horizontal faces, interior B_x, interior B_y.
class FieldState {
 public:
  FieldState(const CartesianMesh& mesh, int k);

  const CartesianMesh& mesh() const { return mesh_; }
  int degree() const { return k_; }
  std::size_t size() const { return values_.size(); }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  std::span<double> vertical_face(int id);
  std::span<const double> vertical_face(int id) const;
  std::span<double> horizontal_face(int id);
  std::span<const double> horizontal_face(int id) const;
  std::span<double> face(const FaceRef& f);
  std::span<const double> face(const FaceRef& f) const;
  std::span<double> interior_x(int cell);
  std::span<const double> interior_x(int cell) const;
  std::span<double> interior_y(int cell);
  std::span<const double> interior_y(int cell) const;

  /// Copy the cell's dofs into element-local order.
  void gather(int cell, std::span<double> local) const;
  std::vector<double> gather(int cell) const;
  /// Write element-local dofs back; shared face dofs are overwritten.
  void scatter(int cell, std::span<const double> local);

  static std::size_t dof_count(const CartesianMesh& mesh, int k);

 private:
  CartesianMesh mesh_;
  int k_;
  std::size_t horizontal_offset_;
  std::size_t interior_x_offset_;
  std::size_t interior_y_offset_;
  std::vector<double> values_;
};

}  // namespace rtdg
