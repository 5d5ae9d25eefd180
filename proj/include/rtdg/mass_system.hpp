#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rtdg/mesh.hpp"
#include "rtdg/rt_element.hpp"

namespace rtdg {

/// Moment-by-dof matrix of RT_k on the reference cell and its blocks.
///
/// Rows are the moment functionals (left, right, bottom, top face moments
/// against P_k, then B_x cell moments, then B_y cell moments); columns are
/// the element-local dofs. On a physical cell the face blocks scale with the
/// face length and the cell blocks with dx*dy.
struct CellMassBlocks {
  int k = 0;
  Eigen::MatrixXd full;
  Eigen::MatrixXd mx;         // (k+1) x (k+1), vertical faces
  Eigen::MatrixXd my;         // (k+1) x (k+1), horizontal faces
  Eigen::MatrixXd nx_left;    // k(k+1) x (k+1)
  Eigen::MatrixXd nx_right;
  Eigen::MatrixXd ny_bottom;
  Eigen::MatrixXd ny_top;
  Eigen::MatrixXd qx;         // k(k+1) x k(k+1)
  Eigen::MatrixXd qy;
  Eigen::PartialPivLU<Eigen::MatrixXd> mx_lu;
  Eigen::PartialPivLU<Eigen::MatrixXd> my_lu;
  Eigen::PartialPivLU<Eigen::MatrixXd> qx_lu;
  Eigen::PartialPivLU<Eigen::MatrixXd> qy_lu;
  // Precomputed solution operators for the time-stepping hot path.
  Eigen::MatrixXd mx_inv;
  Eigen::MatrixXd my_inv;
  Eigen::MatrixXd qx_inv;
  Eigen::MatrixXd qy_inv;
  Eigen::MatrixXd qx_inv_left;    // qx^-1 nx_left
  Eigen::MatrixXd qx_inv_right;
  Eigen::MatrixXd qy_inv_bottom;
  Eigen::MatrixXd qy_inv_top;
};

/// Assembles the blocks by exact Gauss quadrature of nodal basis times modal
/// test function. Throws std::runtime_error if a diagonal block is singular.
CellMassBlocks assemble_blocks(int k);

/// Face dof rates (or values) from a physical face moment vector.
std::vector<double> solve_face_rates(const CellMassBlocks& blocks, Orientation orientation,
                                     std::span<const double> face_rhs, double face_length);

struct InteriorRates {
  std::vector<double> x;
  std::vector<double> y;
};

/// Interior dof rates given the physical cell-moment right-hand sides and the
/// already known face rates of the cell.
InteriorRates solve_rates(const CellMassBlocks& blocks, std::span<const double> rhs_x,
                          std::span<const double> rhs_y, std::span<const double> left,
                          std::span<const double> right, std::span<const double> bottom,
                          std::span<const double> top, double dx, double dy);

/// Allocation-free variant used in the residual loop.
void solve_rates_into(const CellMassBlocks& blocks, std::span<const double> rhs_x,
                      std::span<const double> rhs_y, std::span<const double> left,
                      std::span<const double> right, std::span<const double> bottom,
                      std::span<const double> top, double dx, double dy, std::span<double> out_x,
                      std::span<double> out_y);

}  // namespace rtdg
