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

#include "hohlov/hypergeom.hpp"
#include "hohlov/series.hpp"

namespace hohlov {

/// Which class-defining transform: S is the starlike form
/// z (I f)' / ((1-lambda) z + lambda I f), K the convex form
/// (z (I f)' + z^2 (I f)'') / ((1-lambda) z + lambda z (I f)').
enum class TransformKind { S, K };

/// Parameters of the bi-univalent classes of complex order gamma.
struct ClassParams {
  cplx gamma;     // nonzero complex order
  double lambda;  // in [0, 1]
  double beta;    // in [0, 1)
  double m;       // P_m(beta) index, >= 2

  ClassParams(cplx gamma_, double lambda_, double beta_, double m_);
};

/// Default boundary-integral grid and test radii for membership checks.
inline constexpr int kDefaultGrid = 4096;
inline const std::vector<double> kDefaultRadii = {0.5, 0.9, 0.99};

/// Per-radius pass tolerance, relative to the threshold m pi.
inline constexpr double kMembershipRelTol = 1e-6;

/// Tolerance for the P_m(beta) coefficient cap |h_n| <= m (1 - beta).
inline constexpr double kPmCoefficientRelTol = 1e-12;

/// Atomic measure on the circle: weight w at angle t (radians).
struct PmAtom {
  double angle;
  double weight;
};

/// Finitely supported signed measure generating P_m(beta) members.
/// Normalization: total weight 2 pi; total variation at most m pi for the
/// targeted m (so the unit atom (t, 2 pi) lands in the Caratheodory class P_2).
struct PmMeasure {
  std::vector<PmAtom> atoms;

  double total_weight() const;
  double total_variation() const;
  /// Smallest m this measure certifies: total variation / pi.
  double implied_m() const;
};

/// Trapezoidal approximation (exact-weight periodic rule) of
/// Int_0^{2pi} |Re P(r e^{i theta}) - beta| / (1 - beta) d theta.
/// Requires P(0) = 1, r in (0, 1), grid >= 64; throws BetaOutOfRange for bad beta.
double pm_integral(const TruncatedSeries& P, double r, double beta, int grid);

/// Herglotz-type generator: the Taylor series through the given order of
/// (1/2pi) sum_j w_j (1 + z e^{i t_j}) / (1 - z e^{i t_j}), then shifted by
/// beta: p_beta = (1 - beta) p + beta. Constant term is exactly 1.
TruncatedSeries pm_generate(const PmMeasure& measure, double beta, int order);

/// Result of checking |h_n| <= m (1 - beta) for all n >= 1.
struct PmCoefficientReport {
  bool ok;
  int offending_index;  // smallest failing n, or -1
};

/// Coefficient cap satisfied by every P_m(beta) member. Requires P(0) = 1.
PmCoefficientReport pm_coefficient_check(const TruncatedSeries& P, double m, double beta);

/// The S-form transform 1 + (1/gamma)[z (I f)' / ((1-lambda) z + lambda I f) - 1].
/// Result order is order - 1; constant term is exactly 1.
TruncatedSeries s_transform(const NormalizedFunction& f, const ClassParams& cp,
                            const HohlovParams& hp, int order);

/// The K-form transform 1 + (1/gamma)[(z (I f)' + z^2 (I f)'') /
/// ((1-lambda) z + lambda z (I f)') - 1]. Result order is order - 1.
TruncatedSeries k_transform(const NormalizedFunction& f, const ClassParams& cp,
                            const HohlovParams& hp, int order);

/// The matching transform applied to g = revert(f), in the w variable.
/// g is computed by series reversion at the working order, not from a closed form.
TruncatedSeries inverse_transform(const NormalizedFunction& f, const ClassParams& cp,
                                  const HohlovParams& hp, int order, TransformKind kind);

struct MembershipReport {
  std::vector<double> radii;
  std::vector<double> direct_integrals;
  std::vector<double> inverse_integrals;
  double threshold;  // m pi
  std::vector<bool> radius_pass;
  bool pass;
};

/// Necessary-condition check at finite truncation order and finite radii:
/// both the direct and the inverse transform must satisfy the boundary
/// integral criterion at every radius. A pass is evidence, not a certificate.
MembershipReport membership_check(const NormalizedFunction& f, const ClassParams& cp,
                                  const HohlovParams& hp, TransformKind kind,
                                  const std::vector<double>& radii = kDefaultRadii,
                                  int grid = kDefaultGrid);

}  // namespace hohlov
