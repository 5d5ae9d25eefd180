#include "rtdg/mass_system.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rtdg/basis.hpp"

namespace rtdg {

namespace {

using ConstMap = Eigen::Map<const Eigen::VectorXd>;

void check_invertible(const Eigen::MatrixXd& m, const char* name) {
  if (m.size() == 0) return;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double cond = s(0) / s(s.size() - 1);
  if (!std::isfinite(cond) || cond > 1e12) {
    throw std::runtime_error(std::string("assemble_blocks: singular block ") + name);
  }
}

}  // namespace

CellMassBlocks assemble_blocks(int k) {
  const RTElement element(k);
  const TestSpace face_tests = test_space(TestSpaceKind::kFace, k);
  const TestSpace x_tests = test_space(TestSpaceKind::kCellX, k);
  const TestSpace y_tests = test_space(TestSpaceKind::kCellY, k);
  const QuadratureRule1D q = gauss_legendre(k + 3);
  const int n = element.num_dofs();
  const int nf = k + 1;
  const int ni = k * (k + 1);

  CellMassBlocks b;
  b.k = k;
  b.full = Eigen::MatrixXd::Zero(n, n);

  for (int d = 0; d < n; ++d) {
    // Face moments.
    for (int m = 0; m < nf; ++m) {
      double left = 0.0, right = 0.0, bottom = 0.0, top = 0.0;
      for (int a = 0; a < q.size(); ++a) {
        const double s = q.points[a];
        const double w = q.weights[a] * face_tests.value(m, s - 0.5);
        left += w * element.basis_value(d, 0.0, s).x;
        right += w * element.basis_value(d, 1.0, s).x;
        bottom += w * element.basis_value(d, s, 0.0).y;
        top += w * element.basis_value(d, s, 1.0).y;
      }
      b.full(m, d) = left;
      b.full(nf + m, d) = right;
      b.full(2 * nf + m, d) = bottom;
      b.full(3 * nf + m, d) = top;
    }
    // Cell moments.
    for (int m = 0; m < ni; ++m) {
      double sx = 0.0, sy = 0.0;
      for (int a = 0; a < q.size(); ++a) {
        for (int c = 0; c < q.size(); ++c) {
          const double xi = q.points[a];
          const double eta = q.points[c];
          const double w = q.weights[a] * q.weights[c];
          const Vec2 v = element.basis_value(d, xi, eta);
          sx += w * v.x * x_tests.value(m, xi - 0.5, eta - 0.5);
          sy += w * v.y * y_tests.value(m, xi - 0.5, eta - 0.5);
        }
      }
      b.full(4 * nf + m, d) = sx;
      b.full(4 * nf + ni + m, d) = sy;
    }
  }

  const int ix = element.interior_x_offset();
  const int iy = element.interior_y_offset();
  b.mx = b.full.block(0, 0, nf, nf);
  b.my = b.full.block(2 * nf, 2 * nf, nf, nf);
  b.nx_left = b.full.block(ix, 0, ni, nf);
  b.nx_right = b.full.block(ix, nf, ni, nf);
  b.ny_bottom = b.full.block(iy, 2 * nf, ni, nf);
  b.ny_top = b.full.block(iy, 3 * nf, ni, nf);
  b.qx = b.full.block(ix, ix, ni, ni);
  b.qy = b.full.block(iy, iy, ni, ni);

  check_invertible(b.mx, "M^x");
  check_invertible(b.my, "M^y");
  check_invertible(b.qx, "Q^x");
  check_invertible(b.qy, "Q^y");
  b.mx_lu.compute(b.mx);
  b.my_lu.compute(b.my);
  b.mx_inv = b.mx_lu.inverse();
  b.my_inv = b.my_lu.inverse();
  if (ni > 0) {
    b.qx_lu.compute(b.qx);
    b.qy_lu.compute(b.qy);
    b.qx_inv = b.qx_lu.inverse();
    b.qy_inv = b.qy_lu.inverse();
    b.qx_inv_left = b.qx_inv * b.nx_left;
    b.qx_inv_right = b.qx_inv * b.nx_right;
    b.qy_inv_bottom = b.qy_inv * b.ny_bottom;
    b.qy_inv_top = b.qy_inv * b.ny_top;
  }
  return b;
}

std::vector<double> solve_face_rates(const CellMassBlocks& blocks, Orientation orientation,
                                     std::span<const double> face_rhs, double face_length) {
  const ConstMap rhs(face_rhs.data(), static_cast<Eigen::Index>(face_rhs.size()));
  const auto& lu = orientation == Orientation::kVertical ? blocks.mx_lu : blocks.my_lu;
  const Eigen::VectorXd x = lu.solve(rhs / face_length);
  return {x.data(), x.data() + x.size()};
}

void solve_rates_into(const CellMassBlocks& blocks, std::span<const double> rhs_x,
                      std::span<const double> rhs_y, std::span<const double> left,
                      std::span<const double> right, std::span<const double> bottom,
                      std::span<const double> top, double dx, double dy, std::span<double> out_x,
                      std::span<double> out_y) {
  const Eigen::Index ni = blocks.qx.rows();
  if (ni == 0) return;
  const Eigen::Index nf = blocks.mx.rows();
  const double inv_area = 1.0 / (dx * dy);
  for (Eigen::Index i = 0; i < ni; ++i) {
    double sx = 0.0, sy = 0.0;
    for (Eigen::Index m = 0; m < ni; ++m) {
      sx += blocks.qx_inv(i, m) * rhs_x[m];
      sy += blocks.qy_inv(i, m) * rhs_y[m];
    }
    sx *= inv_area;
    sy *= inv_area;
    for (Eigen::Index f = 0; f < nf; ++f) {
      sx -= blocks.qx_inv_left(i, f) * left[f] + blocks.qx_inv_right(i, f) * right[f];
      sy -= blocks.qy_inv_bottom(i, f) * bottom[f] + blocks.qy_inv_top(i, f) * top[f];
    }
    out_x[i] = sx;
    out_y[i] = sy;
  }
}

InteriorRates solve_rates(const CellMassBlocks& blocks, std::span<const double> rhs_x,
                          std::span<const double> rhs_y, std::span<const double> left,
                          std::span<const double> right, std::span<const double> bottom,
                          std::span<const double> top, double dx, double dy) {
  const std::size_t ni = static_cast<std::size_t>(blocks.qx.rows());
  InteriorRates r{std::vector<double>(ni), std::vector<double>(ni)};
  solve_rates_into(blocks, rhs_x, rhs_y, left, right, bottom, top, dx, dy, r.x, r.y);
  return r;
}

}  // namespace rtdg
