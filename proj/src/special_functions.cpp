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

#include "thermwm/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace thermwm {

double laguerre(int n, int k, double x) {
  if (n < 0 || k < 0) throw std::invalid_argument("laguerre: n, k must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + k - x;
  for (int m = 1; m < n; ++m) {
    const double next = ((2.0 * m + 1.0 + k - x) * cur - (m + k) * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int m = 1; m < n; ++m) {
    const double next = 2.0 * x * cur - 2.0 * m * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_normalized(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_normalized: n must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = std::sqrt(2.0) * x;
  for (int m = 1; m < n; ++m) {
    const double next = std::sqrt(2.0 / (m + 1.0)) * x * cur -
                        std::sqrt(static_cast<double>(m) / (m + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double mehler_kernel(double x, double y, double w) {
  if (!(std::abs(w) < 1.0)) throw std::invalid_argument("mehler_kernel: |w| must be < 1");
  const double one_minus_w2 = 1.0 - w * w;
  return std::exp((2.0 * x * y * w - (x * x + y * y) * w * w) / one_minus_w2) /
         std::sqrt(one_minus_w2);
}

double mehler_series(double x, double y, double w, int terms) {
  // Runs both normalized recurrences side by side; (w/2)^n/n! H_n H_n = w^n h_n h_n.
  double sum = 0.0;
  double hx_prev = 0.0, hx = 1.0;
  double hy_prev = 0.0, hy = 1.0;
  double wn = 1.0;
  for (int n = 0; n < terms; ++n) {
    sum += wn * hx * hy;
    const double a = std::sqrt(2.0 / (n + 1.0));
    const double b = std::sqrt(static_cast<double>(n) / (n + 1.0));
    const double hx_next = a * x * hx - b * hx_prev;
    const double hy_next = a * y * hy - b * hy_prev;
    hx_prev = hx;
    hx = hx_next;
    hy_prev = hy;
    hy = hy_next;
    wn *= w;
  }
  return sum;
}

}  // namespace thermwm
