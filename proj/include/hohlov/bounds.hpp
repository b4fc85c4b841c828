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

#include <optional>
#include <vector>

#include "hohlov/classes.hpp"
#include "hohlov/hypergeom.hpp"

namespace hohlov {

/// A denominator with modulus below this turns its branch into the +inf
/// sentinel instead of failing the whole report; the remaining branches
/// still bound the coefficient.
inline constexpr double kDenomGuard = 1e-14;

/// Every bound branch for |a2| and |a3|, plus the selected minimum.
/// Branches appear in the published listing order; ties pick the lowest index.
struct BoundReport {
  TransformKind kind;  // which class family the branches belong to

  std::vector<double> a2_branches;  // +inf marks a guarded-out branch
  double a2_bound;
  int a2_argmin;

  std::vector<double> a3_branches;
  double a3_bound;
  int a3_argmin;

  ClassParams params;
  std::optional<HohlovParams> operator_params;
  double phi2;
  double phi3;
};

/// Coefficient bounds for the S- or K-form class with general lambda.
///
/// S form, with M = m |gamma| (1 - beta) and D = |(l^2-2l) phi2^2 + (3-l) phi3|:
///   |a2| <= min{ sqrt(M / D); M / ((2-l) phi2) }
///   |a3| <= min{ M/((3-l) phi3) + M/D;
///                M/((3-l) phi3) (1 + M (2l-l^2) / ((2-l)^2 phi2^2));
///                M/((3-l) phi3) (1 + M |(l^2-2l) phi2^2 + 2 (3-l) phi3| / ((2-l)^2 phi2^2)) }
///
/// K form, with D4 = |4 (l^2-2l) phi2^2 + 3 (3-l) phi3|:
///   |a2| <= min{ sqrt(M / D4); M / (2 (2-l) phi2) }
///   |a3| <= min{ M/(3 (3-l) phi3) (1 + M (2l-l^2) / ((2-l)^2 phi2^2));
///                M/(3 (3-l) phi3) + M/D4;
///                M/(3 (3-l) phi3) + M^2/(3 (3-l) phi3) (1 + 3 (3-l) phi3 / (2 (2-l)^2 phi2^2)) }
BoundReport coefficient_bounds(TransformKind kind, const ClassParams& cp, const HohlovParams& hp);

/// As above but with phi2, phi3 supplied directly (no operator parameters).
BoundReport coefficient_bounds_phi(TransformKind kind, const ClassParams& cp, double phi2,
                                   double phi3);

/// The four published lambda in {0, 1} specializations.
enum class SpecialCase {
  SLambda1,  // S form at lambda = 1 (starlike type)
  HLambda0,  // S form at lambda = 0
  KLambda1,  // K form at lambda = 1 (convex type)
  QLambda0,  // K form at lambda = 0
};

/// The specialized formulas evaluated verbatim (they ignore cp.lambda):
///   SLambda1: |a2| <= min{ sqrt(M/|2 phi3 - phi2^2|); M/phi2 },
///             |a3| <= min{ M/|2 phi3 - phi2^2| + M/(2 phi3);
///                          M/(2 phi3) (1 + M/phi2^2);
///                          M/(2 phi3) (1 + M |4 phi3 - phi2^2| / phi2^2) }
///   HLambda0: |a2| <= min{ sqrt(M/(3 phi3)); M/(2 phi2) },  |a3| <= M/(3 phi3)
///   KLambda1: |a2| <= min{ sqrt(M/|6 phi3 - 4 phi2^2|); M/(2 phi2) },
///             |a3| <= min{ M/(6 phi3) (1 + M/phi2^2);
///                          M/(6 phi3) + M/|6 phi3 - 4 phi2^2|;
///                          M/(6 phi3) + M^2/(6 phi3) (1 + 6 phi3 / (2 phi2^2)) }
///   QLambda0: |a2| <= min{ sqrt(M/(9 phi3)); M/(4 phi2) },  |a3| <= M/(9 phi3)
BoundReport special_case_bounds(SpecialCase which, const ClassParams& cp, double phi2,
                                double phi3);

}  // namespace hohlov
