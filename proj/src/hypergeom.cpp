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

#include "hohlov/hypergeom.hpp"

#include <cmath>

namespace hohlov {

HohlovParams::HohlovParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)) || a <= 0 || b <= 0 || c <= 0) {
    throw std::invalid_argument("HohlovParams: a, b, c must be finite positive reals");
  }
}

double pochhammer(double alpha, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  double prod = 1.0;
  for (int k = 0; k < n; ++k) {
    prod *= alpha + static_cast<double>(k);
    if (!std::isfinite(prod)) {
      throw PochhammerOverflow("pochhammer: running product left the double range");
    }
  }
  return prod;
}

double phi_n(const HohlovParams& params, int n) {
  if (n < 1) throw std::invalid_argument("phi_n: n must be >= 1");
  double phi = 1.0;
  for (int k = 1; k < n; ++k) {
    const double dk = static_cast<double>(k);
    phi *= ((params.a + dk - 1.0) * (params.b + dk - 1.0)) / ((params.c + dk - 1.0) * dk);
    if (!std::isfinite(phi)) {
      throw PochhammerOverflow("phi_n: running product left the double range");
    }
  }
  return phi;
}

PhiSequence::PhiSequence(const HohlovParams& params, int max_n) {
  if (max_n < 1) throw std::invalid_argument("PhiSequence: max_n must be >= 1");
  values_.reserve(static_cast<std::size_t>(max_n));
  double phi = 1.0;
  values_.push_back(phi);
  for (int n = 1; n < max_n; ++n) {
    const double dn = static_cast<double>(n);
    phi *= ((params.a + dn - 1.0) * (params.b + dn - 1.0)) / ((params.c + dn - 1.0) * dn);
    if (!std::isfinite(phi)) {
      throw PochhammerOverflow("PhiSequence: running product left the double range");
    }
    values_.push_back(phi);
  }
}

double PhiSequence::at(int n) const {
  if (n < 1 || n > max_n()) throw std::out_of_range("PhiSequence::at: n out of range");
  return values_[static_cast<std::size_t>(n) - 1];
}

TruncatedSeries gauss_2f1_series(const HohlovParams& params, int order) {
  TruncatedSeries out(order);
  double coeff = 1.0;
  out.set(0, coeff);
  for (int k = 0; k < order; ++k) {
    const double dk = static_cast<double>(k);
    coeff *= ((params.a + dk) * (params.b + dk)) / ((params.c + dk) * (dk + 1.0));
    if (!std::isfinite(coeff)) {
      throw PochhammerOverflow("gauss_2f1_series: coefficient left the double range");
    }
    out.set(k + 1, coeff);
  }
  return out;
}

NormalizedFunction hohlov_apply(const HohlovParams& params, const NormalizedFunction& f,
                                int order) {
  if (order < 1) throw std::invalid_argument("hohlov_apply: order must be >= 1");
  const PhiSequence phi(params, order);
  TruncatedSeries out(order);
  out.set(1, 1.0);
  for (int n = 2; n <= order; ++n) out.set(n, phi.at(n) * f[n]);
  return NormalizedFunction(std::move(out));
}

NormalizedFunction bernardi_apply(const NormalizedFunction& f, double delta, int order) {
  if (!(std::isfinite(delta) && delta > -1.0)) {
    throw std::invalid_argument("bernardi_apply: delta must be > -1");
  }
  if (order < 1) throw std::invalid_argument("bernardi_apply: order must be >= 1");
  TruncatedSeries out(order);
  out.set(1, 1.0);
  for (int n = 2; n <= order; ++n) {
    out.set(n, f[n] * ((1.0 + delta) / (static_cast<double>(n) + delta)));
  }
  return NormalizedFunction(std::move(out));
}

HohlovParams alexander_params() { return HohlovParams(1.0, 1.0, 2.0); }

HohlovParams libera_params() { return HohlovParams(1.0, 2.0, 3.0); }

HohlovParams carlson_shaffer_params(double a, double c) { return HohlovParams(a, 1.0, c); }

HohlovParams identity_params(double a) { return HohlovParams(a, 1.0, a); }

}  // namespace hohlov
