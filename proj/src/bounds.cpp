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

#include "hohlov/bounds.hpp"

#include <cmath>
#include <limits>

namespace hohlov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double guarded(double num, double den) { return std::abs(den) < kDenomGuard ? kInf : num / den; }

// Minimum over finite branches; strict < keeps the lowest index on ties.
void select_min(const std::vector<double>& branches, double& bound, int& argmin) {
  bound = kInf;
  argmin = -1;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (branches[i] < bound) {
      bound = branches[i];
      argmin = static_cast<int>(i);
    }
  }
}

BoundReport assemble(TransformKind kind, std::vector<double> a2, std::vector<double> a3,
                     const ClassParams& cp, std::optional<HohlovParams> hp, double phi2,
                     double phi3) {
  BoundReport r{kind, std::move(a2), 0.0, -1, std::move(a3), 0.0, -1, cp, std::move(hp),
                phi2,  phi3};
  select_min(r.a2_branches, r.a2_bound, r.a2_argmin);
  select_min(r.a3_branches, r.a3_bound, r.a3_argmin);
  return r;
}

BoundReport s_form_bounds(const ClassParams& cp, std::optional<HohlovParams> hp, double phi2,
                          double phi3) {
  const double M = cp.m * std::abs(cp.gamma) * (1.0 - cp.beta);
  const double l = cp.lambda;
  const double D = std::abs((l * l - 2.0 * l) * phi2 * phi2 + (3.0 - l) * phi3);
  const double d3 = (3.0 - l) * phi3;
  const double c2sq = (2.0 - l) * (2.0 - l) * phi2 * phi2;

  std::vector<double> a2 = {
      std::sqrt(guarded(M, D)),
      guarded(M, (2.0 - l) * phi2),
  };
  std::vector<double> a3 = {
      guarded(M, d3) + guarded(M, D),
      guarded(M, d3) * (1.0 + M * (2.0 * l - l * l) / c2sq),
      guarded(M, d3) *
          (1.0 + M * std::abs((l * l - 2.0 * l) * phi2 * phi2 + 2.0 * (3.0 - l) * phi3) / c2sq),
  };
  return assemble(TransformKind::S, std::move(a2), std::move(a3), cp, std::move(hp), phi2, phi3);
}

BoundReport k_form_bounds(const ClassParams& cp, std::optional<HohlovParams> hp, double phi2,
                          double phi3) {
  const double M = cp.m * std::abs(cp.gamma) * (1.0 - cp.beta);
  const double l = cp.lambda;
  const double D4 = std::abs(4.0 * (l * l - 2.0 * l) * phi2 * phi2 + 3.0 * (3.0 - l) * phi3);
  const double d3 = 3.0 * (3.0 - l) * phi3;
  const double c2sq = (2.0 - l) * (2.0 - l) * phi2 * phi2;

  std::vector<double> a2 = {
      std::sqrt(guarded(M, D4)),
      guarded(M, 2.0 * (2.0 - l) * phi2),
  };
  std::vector<double> a3 = {
      guarded(M, d3) * (1.0 + M * (2.0 * l - l * l) / c2sq),
      guarded(M, d3) + guarded(M, D4),
      guarded(M, d3) + guarded(M * M, d3) * (1.0 + d3 / (2.0 * c2sq)),
  };
  return assemble(TransformKind::K, std::move(a2), std::move(a3), cp, std::move(hp), phi2, phi3);
}

}  // namespace

BoundReport coefficient_bounds(TransformKind kind, const ClassParams& cp,
                               const HohlovParams& hp) {
  const double phi2 = phi_n(hp, 2);
  const double phi3 = phi_n(hp, 3);
  return kind == TransformKind::S ? s_form_bounds(cp, hp, phi2, phi3)
                                  : k_form_bounds(cp, hp, phi2, phi3);
}

BoundReport coefficient_bounds_phi(TransformKind kind, const ClassParams& cp, double phi2,
                                   double phi3) {
  if (!(phi2 > 0.0 && phi3 > 0.0)) {
    throw std::invalid_argument("coefficient_bounds_phi: phi2, phi3 must be positive");
  }
  return kind == TransformKind::S ? s_form_bounds(cp, std::nullopt, phi2, phi3)
                                  : k_form_bounds(cp, std::nullopt, phi2, phi3);
}

BoundReport special_case_bounds(SpecialCase which, const ClassParams& cp, double phi2,
                                double phi3) {
  if (!(phi2 > 0.0 && phi3 > 0.0)) {
    throw std::invalid_argument("special_case_bounds: phi2, phi3 must be positive");
  }
  const double M = cp.m * std::abs(cp.gamma) * (1.0 - cp.beta);
  const double p2sq = phi2 * phi2;

  std::vector<double> a2;
  std::vector<double> a3;
  TransformKind kind = TransformKind::S;
  switch (which) {
    case SpecialCase::SLambda1: {
      const double D = std::abs(2.0 * phi3 - p2sq);
      a2 = {std::sqrt(guarded(M, D)), guarded(M, phi2)};
      a3 = {
          guarded(M, D) + guarded(M, 2.0 * phi3),
          guarded(M, 2.0 * phi3) * (1.0 + M / p2sq),
          guarded(M, 2.0 * phi3) * (1.0 + M * std::abs(4.0 * phi3 - p2sq) / p2sq),
      };
      break;
    }
    case SpecialCase::HLambda0: {
      a2 = {std::sqrt(guarded(M, 3.0 * phi3)), guarded(M, 2.0 * phi2)};
      a3 = {guarded(M, 3.0 * phi3)};
      break;
    }
    case SpecialCase::KLambda1: {
      kind = TransformKind::K;
      const double D = std::abs(6.0 * phi3 - 4.0 * p2sq);
      a2 = {std::sqrt(guarded(M, D)), guarded(M, 2.0 * phi2)};
      a3 = {
          guarded(M, 6.0 * phi3) * (1.0 + M / p2sq),
          guarded(M, 6.0 * phi3) + guarded(M, D),
          guarded(M, 6.0 * phi3) + guarded(M * M, 6.0 * phi3) * (1.0 + 6.0 * phi3 / (2.0 * p2sq)),
      };
      break;
    }
    case SpecialCase::QLambda0: {
      kind = TransformKind::K;
      a2 = {std::sqrt(guarded(M, 9.0 * phi3)), guarded(M, 4.0 * phi2)};
      a3 = {guarded(M, 9.0 * phi3)};
      break;
    }
  }
  return assemble(kind, std::move(a2), std::move(a3), cp, std::nullopt, phi2, phi3);
}

}  // namespace hohlov
