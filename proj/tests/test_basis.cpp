#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rtdg/basis.hpp"

using namespace rtdg;

TEST(Quadrature, Midpoint) {
  const auto q = gauss_legendre(1);
  ASSERT_EQ(q.size(), 1);
  EXPECT_DOUBLE_EQ(q.points[0], 0.5);
  EXPECT_DOUBLE_EQ(q.weights[0], 1.0);
}

TEST(Quadrature, TwoPointNodes) {
  const auto q = gauss_legendre(2);
  EXPECT_NEAR(q.points[0], 0.5 * (1.0 - 1.0 / std::sqrt(3.0)), 1e-16);
  EXPECT_NEAR(q.points[1], 0.5 * (1.0 + 1.0 / std::sqrt(3.0)), 1e-16);
}

TEST(Quadrature, ExactForMonomials) {
  for (int n = 1; n <= 8; ++n) {
    const auto q = gauss_legendre(n);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double sum = 0.0;
      for (int a = 0; a < n; ++a) sum += q.weights[a] * std::pow(q.points[a], d);
      EXPECT_NEAR(sum, 1.0 / (d + 1), 1e-13) << "n=" << n << " d=" << d;
    }
  }
  const auto q3 = gauss_legendre(3);
  double s = 0.0;
  for (int a = 0; a < 3; ++a) s += q3.weights[a] * std::pow(q3.points[a], 5);
  EXPECT_NEAR(s, 1.0 / 6.0, 1e-14);
}

TEST(Quadrature, RejectsBadSize) {
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
}

TEST(Lagrange, Cardinality) {
  for (int n = 1; n <= 4; ++n) {
    const LagrangeBasis1D b(gauss_legendre(n).points);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) EXPECT_NEAR(b.value(i, b.nodes()[j]), i == j ? 1.0 : 0.0, 1e-14);
    }
  }
}

TEST(Lagrange, PartitionOfUnity) {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 4; ++n) {
    const LagrangeBasis1D b(gauss_legendre(n).points);
    for (int p = 0; p < 50; ++p) {
      const double x = u(gen);
      double sum = 0.0, dsum = 0.0;
      for (int i = 0; i < n; ++i) {
        sum += b.value(i, x);
        dsum += b.derivative(i, x);
      }
      EXPECT_NEAR(sum, 1.0, 1e-13);
      EXPECT_NEAR(dsum, 0.0, 1e-12);
    }
  }
  const LagrangeBasis1D face(gauss_legendre(2).points);
  EXPECT_NEAR(face.value(0, 0.3) + face.value(1, 0.3), 1.0, 1e-15);
}

TEST(Lagrange, DerivativeOfQuadratic) {
  const LagrangeBasis1D b({0.0, 0.5, 1.0});
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d += b.nodes()[i] * b.nodes()[i] * b.derivative(i, 0.5);
  EXPECT_NEAR(d, 1.0, 1e-14);
  EXPECT_THROW(b.value(3, 0.2), std::out_of_range);
}

TEST(TestSpaces, Dimensions) {
  for (int k = 0; k <= 2; ++k) {
    EXPECT_EQ(test_space(TestSpaceKind::kFace, k).size(), k + 1);
    EXPECT_EQ(test_space(TestSpaceKind::kCellX, k).size(), k * (k + 1));
    EXPECT_EQ(test_space(TestSpaceKind::kCellY, k).size(), k * (k + 1));
  }
  EXPECT_THROW(test_space(TestSpaceKind::kFace, 3), std::invalid_argument);
}

TEST(TestSpaces, KnownMembers) {
  const auto f0 = test_space(TestSpaceKind::kFace, 0);
  EXPECT_DOUBLE_EQ(f0.value(0, 0.3), 1.0);
  const auto x1 = test_space(TestSpaceKind::kCellX, 1);
  EXPECT_DOUBLE_EQ(x1.value(0, 0.2, 0.4), 1.0);
  EXPECT_DOUBLE_EQ(x1.value(1, 0.2, 0.4), 0.4);
  const auto f2 = test_space(TestSpaceKind::kFace, 2);
  EXPECT_NEAR(f2.value(1, 0.3), 0.3, 1e-16);
  EXPECT_NEAR(f2.value(2, 0.3), 0.09 - 1.0 / 12.0, 1e-16);
}

TEST(TestSpaces, ZeroMean) {
  const auto q = gauss_legendre(5);
  for (int k = 0; k <= 2; ++k) {
    for (auto kind : {TestSpaceKind::kFace, TestSpaceKind::kCellX, TestSpaceKind::kCellY}) {
      const auto ts = test_space(kind, k);
      for (int m = 1; m < ts.size(); ++m) {
        double sum = 0.0;
        for (int a = 0; a < q.size(); ++a) {
          if (kind == TestSpaceKind::kFace) {
            sum += q.weights[a] * ts.value(m, q.points[a] - 0.5);
            continue;
          }
          for (int b = 0; b < q.size(); ++b) {
            sum += q.weights[a] * q.weights[b] * ts.value(m, q.points[a] - 0.5, q.points[b] - 0.5);
          }
        }
        EXPECT_NEAR(sum, 0.0, 1e-13);
      }
    }
  }
}
