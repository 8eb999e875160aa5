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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thermwm/errors.hpp"

namespace thermwm {

ModeSpace::ModeSpace(std::size_t dim) : dim_(dim) {
  if (dim < 2) throw ConfigError("ModeSpace dimension must be at least 2");
}

Operator::Operator(ModeSpace space, Matrix entries)
    : space_(space), entries_(std::move(entries)) {
  if (entries_.rows() != space_.size() || entries_.cols() != space_.size()) {
    throw ConfigError("operator shape does not match its ModeSpace");
  }
}

nlohmann::json Operator::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
    for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
      entries.push_back({entries_(r, c).real(), entries_(r, c).imag()});
    }
  }
  return {{"dim", space_.dim()}, {"entries", std::move(entries)}};
}

Operator Operator::from_json(const nlohmann::json& j) {
  const ModeSpace space(j.at("dim").get<std::size_t>());
  const auto& entries = j.at("entries");
  const auto n = space.size();
  if (entries.size() != static_cast<std::size_t>(n * n)) {
    throw ConfigError("operator JSON holds the wrong number of entries");
  }
  Matrix m(n, n);
  std::size_t idx = 0;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c, ++idx) {
      const auto& pair = entries.at(idx);
      m(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  return Operator(space, std::move(m));
}

namespace {

void require_same_space(const Operator& a, const Operator& b) {
  if (!(a.space() == b.space())) throw ConfigError("operators act on different spaces");
}

}  // namespace

Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return Operator(a.space_, a.entries_ * b.entries_);
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return Operator(a.space_, a.entries_ + b.entries_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return Operator(a.space_, a.entries_ - b.entries_);
}

Operator operator*(Complex s, const Operator& a) { return Operator(a.space_, s * a.entries_); }

namespace {

struct Extent {
  double z;
  double shift;
  double spread;
  std::size_t min_dim;
};

Extent extent_of(const PointerSpec& spec) {
  struct Visitor {
    Extent operator()(const ThermalPointer& p) const {
      return {p.thermal.z(), 0.0, std::sqrt(p.thermal.mean_occupation() + 0.5), 2};
    }
    Extent operator()(const DisplacedThermalPointer& p) const {
      return {p.thermal.z(), std::abs(p.alpha), std::sqrt(p.thermal.mean_occupation() + 0.5), 2};
    }
    Extent operator()(const NumberPointer& p) const {
      return {0.0, 0.0, std::sqrt(p.n + 0.5), p.n + 1};
    }
    Extent operator()(const GroundPointer&) const { return {0.0, 0.0, std::sqrt(0.5), 2}; }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace

std::size_t adequate_dimension(const PointerSpec& spec, double extra_displacement) {
  const Extent e = extent_of(spec);
  double need = static_cast<double>(e.min_dim);
  if (e.z > 0.0) {
    need = std::max(need, std::floor(std::log(kDefaultTailTolerance) / std::log(e.z)) + 1.0);
  }
  const double reach = e.shift + std::abs(extra_displacement) + 6.0 * e.spread;
  need = std::max(need, std::floor(reach * reach) + 1.0);
  if (!(need <= static_cast<double>(kMaxFockDimension))) {
    throw TruncationError("pointer needs a Fock dimension above " +
                          std::to_string(kMaxFockDimension));
  }
  return static_cast<std::size_t>(need);
}

Operator annihilation_op(const ModeSpace& space) {
  const auto n = space.size();
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) m(i - 1, i) = std::sqrt(static_cast<double>(i));
  return Operator(space, std::move(m));
}

Operator creation_op(const ModeSpace& space) { return annihilation_op(space).adjoint(); }

Operator number_op(const ModeSpace& space) {
  const auto n = space.size();
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = static_cast<double>(i);
  return Operator(space, std::move(m));
}

Operator identity_op(const ModeSpace& space) {
  return Operator(space, Matrix::Identity(space.size(), space.size()));
}

Operator position_op(const ModeSpace& space, double sigma) {
  const Operator c = annihilation_op(space);
  return Operator(space, sigma * (c.entries() + c.entries().adjoint()));
}

Operator momentum_op(const ModeSpace& space, double sigma) {
  const Operator c = annihilation_op(space);
  return Operator(space, Complex(0.0, -1.0 / (2.0 * sigma)) * (c.entries() - c.entries().adjoint()));
}

Operator position_squared_op(const ModeSpace& space, double sigma) {
  const auto n = space.size();
  const double s2 = sigma * sigma;
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = s2 * (2.0 * i + 1.0);
    if (i + 2 < n) {
      const double v = s2 * std::sqrt((i + 1.0) * (i + 2.0));
      m(i + 2, i) = v;
      m(i, i + 2) = v;
    }
  }
  return Operator(space, std::move(m));
}

namespace {

// Fills the k-th sub-diagonal band with
//   d_n = sqrt(n!/(n+k)!) |alpha|^k exp(-|alpha|^2/2) L_n^(k)(|alpha|^2),
// using the recurrence rescaled so every term stays within [-1, 1].
void fill_band(Matrix& m, int k, double r, Complex phase_lower, Complex phase_upper) {
  const int n_max = static_cast<int>(m.rows()) - k;
  const double x = r * r;
  double d0;
  if (k == 0) {
    d0 = std::exp(-0.5 * x);
  } else if (r == 0.0) {
    d0 = 0.0;
  } else {
    d0 = std::exp(k * std::log(r) - 0.5 * x - 0.5 * std::lgamma(k + 1.0));
  }
  double prev = 0.0;
  double cur = d0;
  for (int n = 0; n < n_max; ++n) {
    m(n + k, n) = cur * phase_lower;
    if (k > 0) m(n, n + k) = cur * phase_upper;
    const double next = ((2.0 * n + 1.0 + k - x) * cur - std::sqrt(n * (n + static_cast<double>(k))) * prev) /
                        std::sqrt((n + 1.0) * (n + 1.0 + k));
    prev = cur;
    cur = next;
  }
}

double unitarity_defect(const Matrix& d) {
  const Eigen::Index half = (d.rows() + 1) / 2;
  const Matrix block = d.leftCols(half).adjoint() * d.leftCols(half);
  return (block - Matrix::Identity(half, half)).cwiseAbs().maxCoeff();
}

}  // namespace

Displacement displacement(Complex alpha, const ModeSpace& space, double tolerance) {
  const auto n = space.size();
  if (alpha == Complex(0.0, 0.0)) return {identity_op(space), 0.0};
  Matrix m = Matrix::Zero(n, n);
  const double r = std::abs(alpha);
  const double arg = std::arg(alpha);
  for (int k = 0; k < static_cast<int>(n); ++k) {
    // <n+k|D|n> carries e^{ik arg}; <n|D|n+k> carries (-1)^k e^{-ik arg}.
    const Complex lower = std::polar(1.0, k * arg);
    const Complex upper = (k % 2 == 0 ? 1.0 : -1.0) * std::conj(lower);
    fill_band(m, k, r, lower, upper);
  }
  const double defect = unitarity_defect(m);
  if (!(defect <= tolerance)) {
    throw TruncationError("displacement |alpha|=" + std::to_string(r) + " in dimension " +
                          std::to_string(n) + " has unitarity defect " + std::to_string(defect));
  }
  return {Operator(space, std::move(m)), defect};
}

Operator displacement_op(Complex alpha, const ModeSpace& space, double tolerance) {
  return displacement(alpha, space, tolerance).op;
}

namespace {

Matrix thermal_matrix(const Thermal& t, Eigen::Index n) {
  Matrix m = Matrix::Zero(n, n);
  double pop = t.one_minus_z();
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = pop;
    pop *= t.z();
  }
  return m;
}

double thermal_tail(const Thermal& t, Eigen::Index n) {
  if (t.z() == 0.0) return 0.0;
  return std::exp(static_cast<double>(n) * std::log(t.z()));
}

void check_tail(double tail, double tolerance) {
  if (tail > tolerance) {
    throw TruncationError("pointer tail weight " + std::to_string(tail) +
                          " exceeds tolerance " + std::to_string(tolerance));
  }
}

}  // namespace

DensityOperator realize_pointer(const PointerSpec& spec, const ModeSpace& space,
                                double tail_tolerance) {
  const auto n = space.size();
  struct Visitor {
    const ModeSpace& space;
    Eigen::Index n;
    double tol;

    DensityOperator operator()(const ThermalPointer& p) const {
      const double tail = thermal_tail(p.thermal, n);
      check_tail(tail, tol);
      return {Operator(space, thermal_matrix(p.thermal, n)), true, tail};
    }
    DensityOperator operator()(const DisplacedThermalPointer& p) const {
      check_tail(thermal_tail(p.thermal, n), tol);
      const Matrix d = displacement_op(p.alpha, space).entries();
      Matrix m = d * thermal_matrix(p.thermal, n) * d.adjoint();
      const double tail = 1.0 - m.trace().real();
      check_tail(tail, tol);
      return {Operator(space, std::move(m)), true, std::max(tail, 0.0)};
    }
    DensityOperator operator()(const NumberPointer& p) const {
      if (static_cast<Eigen::Index>(p.n) >= n) {
        throw TruncationError("number state |" + std::to_string(p.n) + "> lies outside the space");
      }
      Matrix m = Matrix::Zero(n, n);
      m(p.n, p.n) = 1.0;
      return {Operator(space, std::move(m)), true, 0.0};
    }
    DensityOperator operator()(const GroundPointer&) const {
      return (*this)(NumberPointer{0});
    }
  };
  return std::visit(Visitor{space, n, tail_tolerance}, spec);
}

double expectation(const DensityOperator& rho, const Operator& op) {
  const Matrix& r = rho.matrix.entries();
  const Complex tr_rx = r.cwiseProduct(op.entries().transpose()).sum();
  if (rho.normalized) return tr_rx.real();
  return tr_rx.real() / rho.trace();
}

QuadratureMoments quadrature_moments(const DensityOperator& rho, double sigma) {
  const ModeSpace& space = rho.matrix.space();
  return {expectation(rho, position_op(space, sigma)), expectation(rho, momentum_op(space, sigma)),
          expectation(rho, position_squared_op(space, sigma))};
}

}  // namespace thermwm
