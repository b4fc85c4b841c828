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

#include "hohlov/classes.hpp"

#include <cmath>
#include <numbers>

namespace hohlov {

namespace {

using std::numbers::pi;

// s / z for a series with zero constant term.
TruncatedSeries shift_down(const TruncatedSeries& s) {
  TruncatedSeries out(s.order() - 1);
  for (int k = 0; k <= out.order(); ++k) out.set(k, s[k + 1]);
  return out;
}

// 1 + (ratio - 1) / gamma with an exactly-1 constant term.
TruncatedSeries complex_order_shift(TruncatedSeries ratio, cplx gamma) {
  ratio.set(0, ratio[0] - 1.0);
  TruncatedSeries out = (1.0 / gamma) * ratio;
  out.set(0, out[0] + 1.0);
  return out;
}

void require_unit_constant(const TruncatedSeries& P, const char* who) {
  if (std::abs(P[0] - 1.0) > 1e-9) {
    throw std::invalid_argument(std::string(who) + ": series must be normalized to P(0) = 1");
  }
}

void require_beta(double beta, const char* who) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw BetaOutOfRange(std::string(who) + ": beta must lie in [0, 1)");
  }
}

}  // namespace

ClassParams::ClassParams(cplx gamma_, double lambda_, double beta_, double m_)
    : gamma(gamma_), lambda(lambda_), beta(beta_), m(m_) {
  if (!(std::isfinite(gamma.real()) && std::isfinite(gamma.imag())) || gamma == cplx{}) {
    throw std::invalid_argument("ClassParams: gamma must be a finite nonzero complex number");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("ClassParams: lambda must lie in [0, 1]");
  }
  require_beta(beta, "ClassParams");
  if (!(std::isfinite(m) && m >= 2.0)) {
    throw std::invalid_argument("ClassParams: m must be >= 2");
  }
}

double PmMeasure::total_weight() const {
  double sum = 0.0;
  for (const PmAtom& a : atoms) sum += a.weight;
  return sum;
}

double PmMeasure::total_variation() const {
  double sum = 0.0;
  for (const PmAtom& a : atoms) sum += std::abs(a.weight);
  return sum;
}

double PmMeasure::implied_m() const { return total_variation() / pi; }

double pm_integral(const TruncatedSeries& P, double r, double beta, int grid) {
  require_beta(beta, "pm_integral");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("pm_integral: r must lie in (0, 1)");
  if (grid < 64) throw std::invalid_argument("pm_integral: grid must be >= 64");
  require_unit_constant(P, "pm_integral");

  const double h = 2.0 * pi / static_cast<double>(grid);
  double sum = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double theta = h * static_cast<double>(j);
    const cplx z = std::polar(r, theta);
    sum += std::abs(eval_at(P, z).real() - beta);
  }
  return sum * h / (1.0 - beta);
}

TruncatedSeries pm_generate(const PmMeasure& measure, double beta, int order) {
  require_beta(beta, "pm_generate");
  const double total = measure.total_weight();
  if (std::abs(total - 2.0 * pi) > 1e-9 * 2.0 * pi) {
    throw std::invalid_argument("pm_generate: atom weights must sum to 2 pi");
  }
  TruncatedSeries p(order);
  p.set(0, 1.0);
  // Kernel (1 + z e^{it}) / (1 - z e^{it}) = 1 + 2 sum_n e^{int} z^n.
  for (int n = 1; n <= order; ++n) {
    cplx hn{};
    for (const PmAtom& a : measure.atoms) {
      hn += a.weight * 2.0 * std::polar(1.0, static_cast<double>(n) * a.angle);
    }
    p.set(n, (1.0 - beta) * hn / (2.0 * pi));
  }
  return p;
}

PmCoefficientReport pm_coefficient_check(const TruncatedSeries& P, double m, double beta) {
  require_beta(beta, "pm_coefficient_check");
  require_unit_constant(P, "pm_coefficient_check");
  const double cap = m * (1.0 - beta) * (1.0 + kPmCoefficientRelTol);
  for (int n = 1; n <= P.order(); ++n) {
    if (std::abs(P[n]) > cap) return {false, n};
  }
  return {true, -1};
}

TruncatedSeries s_transform(const NormalizedFunction& f, const ClassParams& cp,
                            const HohlovParams& hp, int order) {
  const NormalizedFunction F = hohlov_apply(hp, f, order);
  // Numerator z F' and denominator (1-lambda) z + lambda F share a factor z.
  const TruncatedSeries num = differentiate(F.series());
  const TruncatedSeries den = TruncatedSeries::constant(1.0 - cp.lambda, order - 1) +
                              cp.lambda * shift_down(F.series());
  return complex_order_shift(div(num, den), cp.gamma);
}

TruncatedSeries k_transform(const NormalizedFunction& f, const ClassParams& cp,
                            const HohlovParams& hp, int order) {
  const NormalizedFunction F = hohlov_apply(hp, f, order);
  // (z F' + z^2 F'') / z has coefficient (k+1)^2 F_{k+1};
  // ((1-lambda) z + lambda z F') / z is (1-lambda) + lambda F'.
  TruncatedSeries num(order - 1);
  for (int k = 0; k <= num.order(); ++k) {
    const double w = static_cast<double>(k + 1);
    num.set(k, w * w * F[k + 1]);
  }
  const TruncatedSeries den = TruncatedSeries::constant(1.0 - cp.lambda, order - 1) +
                              cp.lambda * differentiate(F.series());
  return complex_order_shift(div(num, den), cp.gamma);
}

TruncatedSeries inverse_transform(const NormalizedFunction& f, const ClassParams& cp,
                                  const HohlovParams& hp, int order, TransformKind kind) {
  const NormalizedFunction g = revert(NormalizedFunction(f.series().resized(order)));
  return kind == TransformKind::S ? s_transform(g, cp, hp, order) : k_transform(g, cp, hp, order);
}

MembershipReport membership_check(const NormalizedFunction& f, const ClassParams& cp,
                                  const HohlovParams& hp, TransformKind kind,
                                  const std::vector<double>& radii, int grid) {
  const int order = f.order();
  const TruncatedSeries direct = kind == TransformKind::S ? s_transform(f, cp, hp, order)
                                                          : k_transform(f, cp, hp, order);
  const TruncatedSeries inverse = inverse_transform(f, cp, hp, order, kind);

  MembershipReport report;
  report.radii = radii;
  report.threshold = cp.m * pi;
  report.pass = true;
  const double cutoff = report.threshold * (1.0 + kMembershipRelTol);
  for (double r : radii) {
    const double di = pm_integral(direct, r, cp.beta, grid);
    const double ii = pm_integral(inverse, r, cp.beta, grid);
    report.direct_integrals.push_back(di);
    report.inverse_integrals.push_back(ii);
    const bool ok = di <= cutoff && ii <= cutoff;
    report.radius_pass.push_back(ok);
    report.pass = report.pass && ok;
  }
  return report;
}

}  // namespace hohlov
