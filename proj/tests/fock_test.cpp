// Copyright 2026 The thermwm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thermwm/fock.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "thermwm/errors.hpp"

namespace thermwm {
namespace {

// exp(alpha c^dag - alpha^* c) in a larger space, cropped to n x n.
Matrix displacement_by_expm(Complex alpha, Eigen::Index n, Eigen::Index padded) {
  Matrix c = Matrix::Zero(padded, padded);
  for (Eigen::Index i = 1; i < padded; ++i) c(i - 1, i) = std::sqrt(static_cast<double>(i));
  const Matrix gen = alpha * c.adjoint() - std::conj(alpha) * c;
  const Matrix full = gen.exp();
  return full.topLeftCorner(n, n);
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(ModeSpace, RejectsTinyDimension) {
  EXPECT_THROW(ModeSpace(1), ConfigError);
  EXPECT_NO_THROW(ModeSpace(2));
}

TEST(Annihilation, TwoLevelMatrix) {
  const Matrix c = annihilation_op(ModeSpace(2)).entries();
  EXPECT_EQ(c(0, 0), Complex(0, 0));
  EXPECT_EQ(c(0, 1), Complex(1, 0));
  EXPECT_EQ(c(1, 0), Complex(0, 0));
  EXPECT_EQ(c(1, 1), Complex(0, 0));
}

TEST(Annihilation, LadderElement) {
  EXPECT_DOUBLE_EQ(annihilation_op(ModeSpace(3)).entries()(1, 2).real(), std::sqrt(2.0));
}

TEST(Annihilation, NumberOperatorIsDiagonal) {
  const ModeSpace s(12);
  const Operator c = annihilation_op(s);
  const Matrix n = (c.adjoint() * c).entries();
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    for (Eigen::Index j = 0; j < s.size(); ++j) {
      EXPECT_NEAR(std::abs(n(i, j) - Complex(i == j ? static_cast<double>(i) : 0.0, 0.0)), 0.0, 1e-14);
    }
  }
}

TEST(Annihilation, CommutatorIsIdentityBelowTop) {
  const ModeSpace s(30);
  const Operator c = annihilation_op(s);
  const Matrix comm = (c * c.adjoint() - c.adjoint() * c).entries();
  // Only the rounding of sqrt(n)^2 separates this from the identity.
  EXPECT_LT(max_abs(comm.topLeftCorner(29, 29) - Matrix::Identity(29, 29)), 64.0 * 30.0 * 1.2e-16);
  // The truncated top level carries -(N - 1) instead of 1.
  EXPECT_NEAR(comm(29, 29).real(), -29.0, 1e-12);
}

TEST(Displacement, ZeroIsIdentity) {
  const ModeSpace s(20);
  const Displacement d = displacement(Complex(0, 0), s);
  EXPECT_EQ(max_abs(d.op.entries() - Matrix::Identity(20, 20)), 0.0);
  EXPECT_EQ(d.unitarity_defect, 0.0);
}

TEST(Displacement, FirstColumnElement) {
  const Complex alpha(0.7, -0.4);
  const Matrix d = displacement_op(alpha, ModeSpace(40)).entries();
  const Complex expected = alpha * std::exp(-0.5 * std::norm(alpha));
  EXPECT_NEAR(std::abs(d(1, 0) - expected), 0.0, 1e-15);
}

TEST(Displacement, InverseProductIsIdentity) {
  const ModeSpace s(60);
  const Complex alpha(0.3, 0.1);
  const Matrix prod = displacement_op(alpha, s).entries() * displacement_op(-alpha, s).entries();
  EXPECT_LT(max_abs((prod - Matrix::Identity(60, 60)).topLeftCorner(30, 30)), 1e-10);
}

TEST(Displacement, MatchesMatrixExponential) {
  for (Complex alpha : {Complex(0.05, 0.0), Complex(0.0, -0.2), Complex(1.1, 0.6), Complex(-2.5, 1.5)}) {
    const Eigen::Index n = 60;
    const Matrix ref = displacement_by_expm(alpha, n, 200);
    const Matrix d = displacement_op(alpha, ModeSpace(n), 1.0).entries();
    EXPECT_LT(max_abs(d - ref), 1e-11) << "alpha=" << alpha;
  }
}

TEST(Displacement, LargeSpaceStaysFinite) {
  const Matrix d = displacement_op(Complex(3.0, -1.0), ModeSpace(600)).entries();
  EXPECT_TRUE(d.allFinite());
  EXPECT_LT(max_abs(d), 1.0 + 1e-12);
}

TEST(Displacement, UnitarityOnLowerHalf) {
  for (double r : {0.01, 0.5, 1.0}) {
    const Complex alpha = std::polar(r, 0.7);
    EXPECT_LT(displacement(alpha, ModeSpace(400)).unitarity_defect, 1e-8) << "r=" << r;
  }
}

TEST(Displacement, CompositionPhaseRule) {
  const ModeSpace s(120);
  const Complex a(0.8, -0.3), b(-0.2, 0.9);
  const Matrix lhs = displacement_op(a, s).entries() * displacement_op(b, s).entries();
  const Complex phase = std::exp(0.5 * (a * std::conj(b) - std::conj(a) * b));
  const Matrix rhs = phase * displacement_op(a + b, s).entries();
  EXPECT_LT(max_abs((lhs - rhs).topLeftCorner(60, 60)), 1e-7);
}

TEST(Displacement, UndersizedSpaceIsRejected) {
  EXPECT_THROW(displacement_op(Complex(6.0, 0.0), ModeSpace(10)), TruncationError);
}

TEST(RealizePointer, ZeroTemperatureIsVacuum) {
  const DensityOperator rho = realize_pointer(ThermalPointer{Thermal::from_z(0.0)}, ModeSpace(8));
  Matrix expected = Matrix::Zero(8, 8);
  expected(0, 0) = 1.0;
  EXPECT_EQ(max_abs(rho.matrix.entries() - expected), 0.0);
  EXPECT_EQ(rho.tail_weight, 0.0);
}

TEST(RealizePointer, ThermalMeanOccupation) {
  const ModeSpace s(200);
  const DensityOperator rho = realize_pointer(ThermalPointer{Thermal::from_z(0.5)}, s);
  // Oracle: sum_n (1 - z) z^n n over the same range.
  double ref = 0.0;
  for (int n = 0; n < 200; ++n) ref += 0.5 * std::pow(0.5, n) * n;
  EXPECT_NEAR(expectation(rho, number_op(s)), ref, 1e-12);
  EXPECT_NEAR(expectation(rho, number_op(s)), 1.0, 1e-10);
}

TEST(RealizePointer, DisplacedThermalMean) {
  const PointerSpec spec = DisplacedThermalPointer{Thermal::from_z(0.5), Complex(1.0, 0.0)};
  const ModeSpace s(adequate_dimension(spec));
  const QuadratureMoments m = quadrature_moments(realize_pointer(spec, s), 1.0);
  EXPECT_NEAR(m.q_mean, 2.0, 1e-10);
  EXPECT_NEAR(m.p_mean, 0.0, 1e-10);
}

TEST(RealizePointer, DisplacedThermalIsHermitianAndPositive) {
  const PointerSpec spec = DisplacedThermalPointer{Thermal::from_z(0.6), Complex(0.4, -1.2)};
  const ModeSpace s(adequate_dimension(spec));
  const DensityOperator rho = realize_pointer(spec, s);
  const Matrix& m = rho.matrix.entries();
  EXPECT_LT(max_abs(m - m.adjoint()), 1e-12);
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  EXPECT_GT(es.eigenvalues().minCoeff(), -1e-10);
  EXPECT_NEAR(rho.trace(), 1.0, 1e-10);
  EXPECT_LE(rho.tail_weight, 1e-10);
}

TEST(RealizePointer, RoomTemperatureIsRefused) {
  const PointerSpec spec = ThermalPointer{Thermal::from_z(0.999999999)};
  EXPECT_THROW(realize_pointer(spec, ModeSpace(4096)), TruncationError);
  EXPECT_THROW(adequate_dimension(spec), TruncationError);
}

TEST(RealizePointer, NumberStateOutsideSpaceIsRefused) {
  EXPECT_THROW(realize_pointer(NumberPointer{5}, ModeSpace(5)), TruncationError);
  EXPECT_NO_THROW(realize_pointer(NumberPointer{4}, ModeSpace(5)));
}

TEST(QuadratureMoments, ThermalIsCentered) {
  const DensityOperator rho = realize_pointer(ThermalPointer{Thermal::from_z(0.7)}, ModeSpace(120));
  const QuadratureMoments m = quadrature_moments(rho, 2.5);
  EXPECT_EQ(m.q_mean, 0.0);
  EXPECT_EQ(m.p_mean, 0.0);
}

TEST(QuadratureMoments, ThermalSecondMomentAtPointNine) {
  const DensityOperator rho = realize_pointer(ThermalPointer{Thermal::from_z(0.9)}, ModeSpace(400));
  // Oracle: sum_n (1 - z) z^n (2n + 1).
  double ref = 0.0;
  for (int n = 0; n < 400; ++n) ref += 0.1 * std::pow(0.9, n) * (2.0 * n + 1.0);
  const double q2 = quadrature_moments(rho, 1.0).q2_mean;
  EXPECT_NEAR(q2, ref, 1e-9);
  EXPECT_NEAR(q2, 19.0, 1e-6);
}

TEST(QuadratureMoments, GroundStateZeroPoint) {
  const double sigma = 4.3e-15;
  const DensityOperator rho = realize_pointer(GroundPointer{}, ModeSpace(5));
  EXPECT_DOUBLE_EQ(quadrature_moments(rho, sigma).q2_mean, sigma * sigma);
}

TEST(QuadratureMoments, ThermalSecondMomentConvergesWithDimension) {
  for (double z : {0.3, 0.6, 0.9}) {
    const Thermal th = Thermal::from_z(z);
    double previous = INFINITY;
    for (std::size_t n : {20, 60, 180, 540}) {
      const DensityOperator rho = realize_pointer(ThermalPointer{th}, ModeSpace(n), 1.0);
      const double err = std::abs(quadrature_moments(rho, 1.0).q2_mean - th.fluctuation_ratio());
      EXPECT_LE(err, previous);
      previous = err;
    }
    EXPECT_LT(previous, 1e-9) << "z=" << z;
  }
}

TEST(QuadratureMoments, UnnormalizedStateIsDividedByTrace) {
  const ModeSpace s(30);
  DensityOperator rho = realize_pointer(DisplacedThermalPointer{Thermal::from_z(0.2), Complex(0.5, 0.3)}, s);
  const QuadratureMoments ref = quadrature_moments(rho, 1.0);
  DensityOperator scaled{Operator(s, 0.25 * rho.matrix.entries()), false, rho.tail_weight};
  const QuadratureMoments m = quadrature_moments(scaled, 1.0);
  EXPECT_NEAR(m.q_mean, ref.q_mean, 1e-13);
  EXPECT_NEAR(m.p_mean, ref.p_mean, 1e-13);
  EXPECT_NEAR(m.q2_mean, ref.q2_mean, 1e-13);
}

TEST(AdequateDimension, SatisfiesBothBounds) {
  const Thermal th = Thermal::from_z(0.9);
  const std::size_t n = adequate_dimension(ThermalPointer{th}, 0.3);
  EXPECT_LT(std::pow(0.9, static_cast<double>(n)), 1e-10);
  const double reach = 0.3 + 6.0 * std::sqrt(th.mean_occupation() + 0.5);
  EXPECT_LT(reach * reach, static_cast<double>(n));
}

TEST(OperatorJson, RoundTripsAndUsesRowMajorPairs) {
  const ModeSpace s(3);
  const Operator d = displacement_op(Complex(0.2, -0.1), s, 1.0);
  const nlohmann::json j = d.to_json();
  EXPECT_EQ(j.at("dim").get<int>(), 3);
  ASSERT_EQ(j.at("entries").size(), 9u);
  EXPECT_DOUBLE_EQ(j.at("entries")[1][0].get<double>(), d.entries()(0, 1).real());
  EXPECT_DOUBLE_EQ(j.at("entries")[1][1].get<double>(), d.entries()(0, 1).imag());
  const Operator back = Operator::from_json(j);
  EXPECT_EQ(max_abs(back.entries() - d.entries()), 0.0);
}

TEST(OperatorJson, RejectsWrongEntryCount) {
  nlohmann::json j = {{"dim", 2}, {"entries", {{1.0, 0.0}}}};
  EXPECT_THROW(Operator::from_json(j), ConfigError);
}

TEST(Thermal, RejectsOutOfRange) {
  EXPECT_THROW(Thermal::from_z(1.0), ConfigError);
  EXPECT_THROW(Thermal::from_z(-0.1), ConfigError);
  EXPECT_NO_THROW(Thermal::from_z(0.0));
}

TEST(Thermal, ComplementKeepsPrecisionNearOne) {
  const Thermal th = Thermal::from_energy_ratio(7.2e-10);
  EXPECT_NEAR(th.one_minus_z() / 7.2e-10, 1.0, 1e-9);
}

}  // namespace
}  // namespace thermwm
