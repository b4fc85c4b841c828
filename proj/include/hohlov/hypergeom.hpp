// Copyright (c) 2026 the hohlov authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "hohlov/series.hpp"

namespace hohlov {

/// Parameters (a, b, c) of the convolution operator I_{a,b,c}.
/// Restricted to finite positive reals, which keeps every phi_n > 0.
struct HohlovParams {
  double a;
  double b;
  double c;

  HohlovParams(double a_, double b_, double c_);
};

/// Rising factorial alpha (alpha+1) ... (alpha+n-1), with empty product 1.
/// Computed by iterated multiplication; throws PochhammerOverflow when the
/// running product leaves the double range.
double pochhammer(double alpha, int n);

/// The operator multiplier phi_n = (a)_{n-1} (b)_{n-1} / ((c)_{n-1} (n-1)!),
/// evaluated by the ratio recurrence phi_{n+1} = phi_n (a+n-1)(b+n-1)/((c+n-1) n).
double phi_n(const HohlovParams& params, int n);

/// Multipliers phi_1..phi_N precomputed in one pass (phi_1 = 1).
class PhiSequence {
 public:
  PhiSequence(const HohlovParams& params, int max_n);

  double at(int n) const;  // n in [1, max_n]
  int max_n() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;  // values_[n-1] = phi_n
};

/// Taylor coefficients of 2F1(a,b,c; z): coefficient k is (a)_k (b)_k / ((c)_k k!).
TruncatedSeries gauss_2f1_series(const HohlovParams& params, int order);

/// I_{a,b,c} f = [z 2F1(a,b,c;z)] * f: coefficient n maps a_n to phi_n a_n.
NormalizedFunction hohlov_apply(const HohlovParams& params, const NormalizedFunction& f,
                                int order);

/// Bernardi integral operator (1+delta)/z^delta Int_0^z t^{delta-1} f(t) dt,
/// evaluated termwise: a_n maps to a_n (1+delta)/(n+delta). Requires delta > -1.
/// Deliberately not routed through phi_n so the two agree only if both are right.
NormalizedFunction bernardi_apply(const NormalizedFunction& f, double delta, int order);

// Classical special cases of I_{a,b,c}.
HohlovParams alexander_params();                           // (1, 1, 2)
HohlovParams libera_params();                              // (1, 2, 3)
HohlovParams carlson_shaffer_params(double a, double c);   // (a, 1, c)
HohlovParams identity_params(double a = 1.0);              // (a, 1, a), acts as the identity

}  // namespace hohlov
