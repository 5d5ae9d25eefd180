#pragma once

#include <vector>

namespace rtdg {

/// Gauss-Legendre rule mapped to [0, 1]. Weights sum to one.
struct QuadratureRule1D {
  std::vector<double> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
};

/// n-point Gauss-Legendre rule on [0, 1], 1 <= n <= 10. Rules up to n = 5
/// come from tables; larger ones are computed by Newton iteration.
QuadratureRule1D gauss_legendre(int n);

/// Nodal Lagrange basis on a set of distinct points.
class LagrangeBasis1D {
 public:
  explicit LagrangeBasis1D(std::vector<double> nodes);

  int degree() const { return static_cast<int>(nodes_.size()) - 1; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }

  double value(int i, double xi) const;
  double derivative(int i, double xi) const;

 private:
  void check_index(int i) const;

  std::vector<double> nodes_;
  std::vector<double> denominators_;
};

double lagrange_eval(const LagrangeBasis1D& basis, int i, double xi);
double lagrange_deriv(const LagrangeBasis1D& basis, int i, double xi);

/// Modal polynomials 1, s, s^2 - 1/12 on [-1/2, 1/2]. All but the first have
/// zero mean.
double modal_value(int degree, double s);
double modal_derivative(int degree, double s);

enum class TestSpaceKind {
  kFace,   // P_k on a face, variable s
  kCellX,  // d/dx Q_{k,k} = Q_{k-1,k}, tests the B_x cell moments
  kCellY,  // d/dy Q_{k,k} = Q_{k,k-1}, tests the B_y cell moments
};

/// A product of modal polynomials p_{sx}(s) * p_{ty}(t).
struct ModalTerm {
  int s_degree = 0;
  int t_degree = 0;
};

/// Moment test functions in the centered reference frame [-1/2, 1/2]^2.
/// Callers working on [0, 1]^2 shift coordinates by 1/2 first.
struct TestSpace {
  TestSpaceKind kind = TestSpaceKind::kFace;
  int k = 0;
  std::vector<ModalTerm> terms;

  int size() const { return static_cast<int>(terms.size()); }
  double value(int m, double s, double t = 0.0) const;
  double d_ds(int m, double s, double t = 0.0) const;
  double d_dt(int m, double s, double t = 0.0) const;
};

TestSpace test_space(TestSpaceKind kind, int k);

}  // namespace rtdg
