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

#include <complex>
#include <vector>

#include "hohlov/errors.hpp"

namespace hohlov {

using cplx = std::complex<double>;

/// Default truncation order for pipelines that do not need more.
inline constexpr int kDefaultOrder = 16;

/// A divisor whose constant term has modulus at most this is treated as singular.
inline constexpr double kDivEpsilon = 1e-12;

/// Degree-N complex Taylor polynomial c0 + c1 z + ... + cN z^N.
///
/// Immutable in spirit: every operation returns a fresh value. The order is
/// exact: a series of order N always carries N+1 coefficients, and binary
/// operations return the minimum of the operand orders.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(int order);

  /// Coefficients c0..cN, order deduced as size-1. Entries must be finite.
  explicit TruncatedSeries(std::vector<cplx> coeffs);
  TruncatedSeries(std::initializer_list<cplx> coeffs);

  static TruncatedSeries constant(cplx value, int order);
  /// The series z at the given order (order >= 1).
  static TruncatedSeries variable(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^k; zero outside [0, order].
  cplx operator[](int k) const noexcept {
    return (k >= 0 && k <= order()) ? coeffs_[static_cast<std::size_t>(k)] : cplx{};
  }

  /// Overwrite coefficient k (0 <= k <= order). Value must be finite.
  void set(int k, cplx value);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

  /// Copy truncated (or zero-extended) to the given order.
  TruncatedSeries resized(int new_order) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  std::vector<cplx> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator*(cplx scale, const TruncatedSeries& s);

/// Cauchy product through the shared order.
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// Power-series quotient; throws DivisionBySingularSeries when |t0| <= kDivEpsilon.
TruncatedSeries div(const TruncatedSeries& s, const TruncatedSeries& t);

/// Termwise derivative; order drops by one. Requires order >= 1.
TruncatedSeries differentiate(const TruncatedSeries& s);

/// Componentwise (Hadamard) coefficient product.
TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t);

/// Taylor coefficients of f(g(z)) through the shared order.
/// Throws CompositionRequiresZeroConstant unless g(0) = 0 exactly.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Horner evaluation of the polynomial at z.
cplx eval_at(const TruncatedSeries& s, cplx z);

/// A series normalized to f(0) = 0, f'(0) = 1 (exactly), order >= 1.
class NormalizedFunction {
 public:
  explicit NormalizedFunction(TruncatedSeries series);

  /// z + a2 z^2 + a3 z^3 + ... from the tail coefficients a2, a3, ...
  static NormalizedFunction from_tail(const std::vector<cplx>& tail, int order);

  const TruncatedSeries& series() const noexcept { return series_; }
  int order() const noexcept { return series_.order(); }
  cplx operator[](int k) const noexcept { return series_[k]; }

 private:
  TruncatedSeries series_;
};

/// Compositional inverse: g with f(g(w)) = w through the order of f.
NormalizedFunction revert(const NormalizedFunction& f);

}  // namespace hohlov
