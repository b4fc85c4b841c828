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

#include "hohlov/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace hohlov {

namespace {

void require_finite(const std::vector<cplx>& coeffs) {
  for (const cplx& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("TruncatedSeries: coefficients must be finite");
    }
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, cplx{});
}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: need at least c0");
  require_finite(coeffs_);
}

TruncatedSeries::TruncatedSeries(std::initializer_list<cplx> coeffs)
    : TruncatedSeries(std::vector<cplx>(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(cplx value, int order) {
  TruncatedSeries s(order);
  s.set(0, value);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
  if (order < 1) throw std::invalid_argument("variable: order must be >= 1");
  TruncatedSeries s(order);
  s.set(1, 1.0);
  return s;
}

void TruncatedSeries::set(int k, cplx value) {
  if (k < 0 || k > order()) throw std::out_of_range("TruncatedSeries::set: index out of range");
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::invalid_argument("TruncatedSeries::set: value must be finite");
  }
  coeffs_[static_cast<std::size_t>(k)] = value;
}

TruncatedSeries TruncatedSeries::resized(int new_order) const {
  TruncatedSeries out(new_order);
  const int n = std::min(new_order, order());
  for (int k = 0; k <= n; ++k) out.set(k, (*this)[k]);
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int n = std::min(s.order(), t.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) out.set(k, s[k] + t[k]);
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int n = std::min(s.order(), t.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) out.set(k, s[k] - t[k]);
  return out;
}

TruncatedSeries operator*(cplx scale, const TruncatedSeries& s) {
  TruncatedSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) out.set(k, scale * s[k]);
  return out;
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int n = std::min(s.order(), t.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) {
    cplx acc{};
    for (int i = 0; i <= k; ++i) acc += s[i] * t[k - i];
    out.set(k, acc);
  }
  return out;
}

TruncatedSeries div(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (std::abs(t[0]) <= kDivEpsilon) {
    throw DivisionBySingularSeries("div: divisor constant term is numerically zero");
  }
  const int n = std::min(s.order(), t.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) {
    cplx acc = s[k];
    for (int j = 1; j <= k; ++j) acc -= t[j] * out[k - j];
    out.set(k, acc / t[0]);
  }
  return out;
}

TruncatedSeries differentiate(const TruncatedSeries& s) {
  if (s.order() < 1) throw std::invalid_argument("differentiate: order must be >= 1");
  TruncatedSeries out(s.order() - 1);
  for (int k = 0; k <= out.order(); ++k) out.set(k, static_cast<double>(k + 1) * s[k + 1]);
  return out;
}

TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int n = std::min(s.order(), t.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) out.set(k, s[k] * t[k]);
  return out;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (std::abs(g[0]) > 0.0) {
    throw CompositionRequiresZeroConstant("compose: inner series must vanish at 0");
  }
  const int n = std::min(f.order(), g.order());
  const TruncatedSeries inner = g.resized(n);
  // Horner over the outer coefficients; g(0) = 0 keeps each step exact.
  TruncatedSeries out = TruncatedSeries::constant(f[n], n);
  for (int k = n - 1; k >= 0; --k) {
    out = mul(out, inner);
    out.set(0, out[0] + f[k]);
  }
  return out;
}

cplx eval_at(const TruncatedSeries& s, cplx z) {
  cplx acc = s[s.order()];
  for (int k = s.order() - 1; k >= 0; --k) acc = acc * z + s[k];
  return acc;
}

NormalizedFunction::NormalizedFunction(TruncatedSeries series) : series_(std::move(series)) {
  if (series_.order() < 1 || series_[0] != cplx{} || series_[1] != cplx{1.0}) {
    throw std::invalid_argument("NormalizedFunction: series must be z + a2 z^2 + ...");
  }
}

NormalizedFunction NormalizedFunction::from_tail(const std::vector<cplx>& tail, int order) {
  TruncatedSeries s(order);
  s.set(1, 1.0);
  for (std::size_t i = 0; i < tail.size(); ++i) {
    const int k = static_cast<int>(i) + 2;
    if (k > order) break;
    s.set(k, tail[i]);
  }
  return NormalizedFunction(std::move(s));
}

NormalizedFunction revert(const NormalizedFunction& f) {
  const int n = f.order();
  TruncatedSeries g(n);
  g.set(1, 1.0);
  // b_k is fixed by requiring [w^k] f(g(w)) = 0; with f'(0) = 1 it enters the
  // composition linearly, so b_k = -[w^k] f(g) evaluated with b_k = 0.
  for (int k = 2; k <= n; ++k) {
    const TruncatedSeries partial = compose(f.series().resized(k), g.resized(k));
    g.set(k, -partial[k]);
  }
  return NormalizedFunction(std::move(g));
}

}  // namespace hohlov
