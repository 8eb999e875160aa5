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

#ifndef THERMWM_FOCK_HPP_
#define THERMWM_FOCK_HPP_

#include <complex>
#include <cstddef>
#include <variant>

#include <Eigen/Dense>
#include <json.hpp>

#include "thermwm/thermal.hpp"

namespace thermwm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Largest Fock dimension the adequacy rule will ever propose.
inline constexpr std::size_t kMaxFockDimension = 4096;
/// Default bound on population leaking past the top Fock state.
inline constexpr double kDefaultTailTolerance = 1e-10;
/// Default bound on max|D^dag D - I| over the lower half of the space.
inline constexpr double kDefaultUnitarityTolerance = 1e-8;

/// Span of Fock states |0>, ..., |dim-1>.
class ModeSpace {
 public:
  /// Throws ConfigError when dim < 2.
  explicit ModeSpace(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(dim_); }

  friend bool operator==(const ModeSpace&, const ModeSpace&) = default;

 private:
  std::size_t dim_;
};

/// Dense complex matrix tied to a ModeSpace.
class Operator {
 public:
  /// Throws ConfigError when the matrix is not dim x dim.
  Operator(ModeSpace space, Matrix entries);

  const ModeSpace& space() const { return space_; }
  const Matrix& entries() const { return entries_; }

  Operator adjoint() const { return Operator(space_, entries_.adjoint()); }
  Complex trace() const { return entries_.trace(); }

  /// {"dim": N, "entries": [[re, im], ...]} in row-major order.
  nlohmann::json to_json() const;
  static Operator from_json(const nlohmann::json& j);

  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, const Operator& a);

 private:
  ModeSpace space_;
  Matrix entries_;
};

/// A density matrix. Unnormalized instances come from postselection and carry
/// the success probability as their trace.
struct DensityOperator {
  Operator matrix;
  bool normalized = true;
  /// 1 - sum of populations retained in the truncated space.
  double tail_weight = 0.0;

  double trace() const { return matrix.trace().real(); }
};

struct ThermalPointer {
  Thermal thermal;
};
struct DisplacedThermalPointer {
  Thermal thermal;
  Complex alpha;
};
struct NumberPointer {
  std::size_t n = 0;
};
struct GroundPointer {};

using PointerSpec =
    std::variant<ThermalPointer, DisplacedThermalPointer, NumberPointer, GroundPointer>;

/// Smallest dimension with z^N < 1e-10 and (|shift| + 6 sd)^2 < N, where the
/// shift is the pointer's own displacement plus `extra_displacement`.
/// Throws TruncationError when that exceeds kMaxFockDimension.
std::size_t adequate_dimension(const PointerSpec& spec, double extra_displacement = 0.0);

Operator annihilation_op(const ModeSpace& space);
Operator creation_op(const ModeSpace& space);
Operator number_op(const ModeSpace& space);
Operator identity_op(const ModeSpace& space);

/// q = sigma (c + c^dag).
Operator position_op(const ModeSpace& space, double sigma);
/// p = -i (c - c^dag) / (2 sigma).
Operator momentum_op(const ModeSpace& space, double sigma);
/// q^2 with its matrix elements taken from the infinite space, so the last
/// diagonal entry is sigma^2 (2N - 1) rather than the truncated product's.
Operator position_squared_op(const ModeSpace& space, double sigma);

struct Displacement {
  Operator op;
  /// max|D^dag D - I| over the lower ceil(N/2) block.
  double unitarity_defect;
};

/// D(alpha) from closed-form Laguerre matrix elements. Throws TruncationError
/// when the unitarity defect exceeds `tolerance`.
Displacement displacement(Complex alpha, const ModeSpace& space,
                          double tolerance = kDefaultUnitarityTolerance);
Operator displacement_op(Complex alpha, const ModeSpace& space,
                         double tolerance = kDefaultUnitarityTolerance);

/// Throws TruncationError when the tail weight exceeds `tail_tolerance`.
DensityOperator realize_pointer(const PointerSpec& spec, const ModeSpace& space,
                                double tail_tolerance = kDefaultTailTolerance);

struct QuadratureMoments {
  double q_mean;
  double p_mean;
  double q2_mean;
};

/// Tr(rho q), Tr(rho p), Tr(rho q^2); unnormalized states are divided by their
/// trace first.
QuadratureMoments quadrature_moments(const DensityOperator& rho, double sigma);

/// Real part of Tr(rho op) / Tr(rho).
double expectation(const DensityOperator& rho, const Operator& op);

}  // namespace thermwm

#endif  // THERMWM_FOCK_HPP_
