#include "rtdg/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rtdg {

namespace {

// Positive abscissae and weights of Gauss-Legendre rules on [-1, 1].
struct SymmetricRule {
  std::vector<double> x;  // non-negative abscissae, ascending
  std::vector<double> w;
};

SymmetricRule tabulated_rule(int n) {
  switch (n) {
    case 1:
      return {{0.0}, {2.0}};
    case 2:
      return {{0.57735026918962576451}, {1.0}};
    case 3:
      return {{0.0, 0.77459666924148337704}, {0.88888888888888888889, 0.55555555555555555556}};
    case 4:
      return {{0.33998104358485626480, 0.86113631159405257522},
              {0.65214515486254614263, 0.34785484513745385737}};
    case 5:
      return {{0.0, 0.53846931010568309104, 0.90617984593866399280},
              {0.56888888888888888889, 0.47862867049936646804, 0.23692688505618908751}};
    default:
      return {};
  }
}

QuadratureRule1D newton_rule(int n) {
  QuadratureRule1D rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Roots come out descending in x; store ascending on [0, 1].
    rule.points[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

QuadratureRule1D gauss_legendre(int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("gauss_legendre: unsupported number of points " + std::to_string(n));
  }
  if (n > 5) return newton_rule(n);

  const SymmetricRule half = tabulated_rule(n);
  QuadratureRule1D rule;
  const int m = static_cast<int>(half.x.size());
  const bool has_center = (n % 2) == 1;
  for (int i = m - 1; i >= (has_center ? 1 : 0); --i) {
    rule.points.push_back(0.5 * (1.0 - half.x[i]));
    rule.weights.push_back(0.5 * half.w[i]);
  }
  if (has_center) {
    rule.points.push_back(0.5);
    rule.weights.push_back(0.5 * half.w[0]);
  }
  for (int i = has_center ? 1 : 0; i < m; ++i) {
    rule.points.push_back(0.5 * (1.0 + half.x[i]));
    rule.weights.push_back(0.5 * half.w[i]);
  }
  return rule;
}

LagrangeBasis1D::LagrangeBasis1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("LagrangeBasis1D: no nodes");
  denominators_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    double d = 1.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      if (j == i) continue;
      const double diff = nodes_[i] - nodes_[j];
      if (diff == 0.0) throw std::invalid_argument("LagrangeBasis1D: nodes must be distinct");
      d *= diff;
    }
    denominators_[i] = d;
  }
}

void LagrangeBasis1D::check_index(int i) const {
  if (i < 0 || i >= size()) {
    throw std::out_of_range("LagrangeBasis1D: basis index " + std::to_string(i) + " out of range");
  }
}

double LagrangeBasis1D::value(int i, double xi) const {
  check_index(i);
  double p = 1.0;
  for (int j = 0; j < size(); ++j) {
    if (j != i) p *= xi - nodes_[j];
  }
  return p / denominators_[i];
}

double LagrangeBasis1D::derivative(int i, double xi) const {
  check_index(i);
  double sum = 0.0;
  for (int m = 0; m < size(); ++m) {
    if (m == i) continue;
    double p = 1.0;
    for (int j = 0; j < size(); ++j) {
      if (j != i && j != m) p *= xi - nodes_[j];
    }
    sum += p;
  }
  return sum / denominators_[i];
}

double lagrange_eval(const LagrangeBasis1D& basis, int i, double xi) { return basis.value(i, xi); }
double lagrange_deriv(const LagrangeBasis1D& basis, int i, double xi) { return basis.derivative(i, xi); }

double modal_value(int degree, double s) {
  switch (degree) {
    case 0: return 1.0;
    case 1: return s;
    case 2: return s * s - 1.0 / 12.0;
    default: throw std::out_of_range("modal_value: degree > 2");
  }
}

double modal_derivative(int degree, double s) {
  switch (degree) {
    case 0: return 0.0;
    case 1: return 1.0;
    case 2: return 2.0 * s;
    default: throw std::out_of_range("modal_derivative: degree > 2");
  }
}

double TestSpace::value(int m, double s, double t) const {
  const ModalTerm& term = terms.at(m);
  return modal_value(term.s_degree, s) * modal_value(term.t_degree, t);
}

double TestSpace::d_ds(int m, double s, double t) const {
  const ModalTerm& term = terms.at(m);
  return modal_derivative(term.s_degree, s) * modal_value(term.t_degree, t);
}

double TestSpace::d_dt(int m, double s, double t) const {
  const ModalTerm& term = terms.at(m);
  return modal_value(term.s_degree, s) * modal_derivative(term.t_degree, t);
}

TestSpace test_space(TestSpaceKind kind, int k) {
  if (k < 0 || k > 2) {
    throw std::invalid_argument("test_space: unsupported degree " + std::to_string(k));
  }
  TestSpace space;
  space.kind = kind;
  space.k = k;
  switch (kind) {
    case TestSpaceKind::kFace:
      for (int d = 0; d <= k; ++d) space.terms.push_back({d, 0});
      break;
    case TestSpaceKind::kCellX:
      // {1, eta} and {1, xi, eta, xi eta, eta^2 - 1/12, xi (eta^2 - 1/12)}
      if (k == 1) space.terms = {{0, 0}, {0, 1}};
      if (k == 2) space.terms = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}};
      break;
    case TestSpaceKind::kCellY:
      // {1, xi} and {1, xi, eta, xi eta, xi^2 - 1/12, (xi^2 - 1/12) eta}
      if (k == 1) space.terms = {{0, 0}, {1, 0}};
      if (k == 2) space.terms = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}};
      break;
  }
  return space;
}

}  // namespace rtdg
