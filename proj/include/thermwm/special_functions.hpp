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

#ifndef THERMWM_SPECIAL_FUNCTIONS_HPP_
#define THERMWM_SPECIAL_FUNCTIONS_HPP_

namespace thermwm {

/// Generalized Laguerre polynomial L_n^(k)(x) by upward three-term recurrence.
double laguerre(int n, int k, double x);

/// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

/// H_n(x) / sqrt(2^n n!), which stays O(exp(x^2/2)) for large n.
double hermite_normalized(int n, double x);

/// Closed form of sum_n (w/2)^n / n! H_n(x) H_n(y) for |w| < 1.
double mehler_kernel(double x, double y, double w);

/// The same sum truncated after `terms` terms.
double mehler_series(double x, double y, double w, int terms);

}  // namespace thermwm

#endif  // THERMWM_SPECIAL_FUNCTIONS_HPP_
