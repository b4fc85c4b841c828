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

#include "hohlov/extremal.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace hohlov {

namespace {

using std::numbers::pi;

FeasibilityTuple finish_tuple(cplx p1, cplx p2, cplx q2, const ClassParams& cp) {
  const double cap = cp.m * (1.0 - cp.beta);
  const double worst = std::max({std::abs(p1), std::abs(p2), std::abs(q2)});
  return {p1, p2, -p1, q2, worst <= cap, cap - worst};
}

struct Candidate {
  cplx a2;
  cplx a3;
  double objective;
  double slack;
};

// Coordinate ascent refined around the best sample. The walk happens in the
// coordinates (a2, e) with a3 = a2^2 + e: the two caps on p2 and q2 are disks
// in a3 whose midpoint is a2^2 for both families, so the p2/q2 moduli are
// |v +- B e| with v aligned to a2^2. Steps on e are taken in the frame
// spanned by a2^2 and i a2^2; the tangential leg is the strictly improving
// direction toward the lens center, where fixed axes stall. Moves keeping
// the objective bit-identical are accepted when they strictly improve the
// slack, which lets the climb walk the constraint ridge; the radial scaling
// on a2 exploits that the whole tuple is homogeneous in (a2, a2^2).
template <typename MapFn, typename ObjFn>
Candidate hill_climb(const MapFn& map, const ObjFn& objective, Candidate start, double step_a2,
                     double step_e) {
  constexpr int kIterations = 200;
  double step_ray = 0.1;
  cplx best_a2 = start.a2;
  cplx best_e = start.a3 - start.a2 * start.a2;
  double best_obj = start.objective;
  double best_slack = start.slack;
  for (int iter = 0; iter < kIterations; ++iter) {
    bool accepted = false;
    const cplx sq = best_a2 * best_a2;
    const cplx frame = std::abs(sq) > 1e-30 ? sq / std::abs(sq) : cplx{1.0};
    for (int move = 0; move < 10; ++move) {
      const double sign = (move % 2 == 0) ? 1.0 : -1.0;
      cplx a2 = best_a2;
      cplx e = best_e;
      switch (move / 2) {
        case 0: a2 += sign * step_a2; break;
        case 1: a2 += cplx(0.0, sign * step_a2); break;
        case 2: e += sign * step_e * frame; break;
        case 3: e += sign * step_e * frame * cplx(0.0, 1.0); break;
        default: a2 *= 1.0 + sign * step_ray; break;
      }
      const cplx a3 = a2 * a2 + e;
      const FeasibilityTuple tuple = map(a2, a3);
      if (!tuple.feasible) continue;
      const double obj = objective(a2, a3);
      if (obj > best_obj || (obj == best_obj && tuple.slack > best_slack)) {
        best_a2 = a2;
        best_e = e;
        best_obj = obj;
        best_slack = tuple.slack;
        accepted = true;
      }
    }
    if (!accepted) {
      step_a2 *= 0.5;
      step_e *= 0.5;
      step_ray *= 0.5;
    }
  }
  return {best_a2, best_a2 * best_a2 + best_e, best_obj, best_slack};
}

}  // namespace

FeasibilityTuple feasibility_map_s(cplx a2, cplx a3, const ClassParams& cp, double phi2,
                                   double phi3) {
  const double l = cp.lambda;
  const cplx quad = (l * l - 2.0 * l) * phi2 * phi2 * a2 * a2;
  const double lin3 = (3.0 - l) * phi3;
  const cplx p1 = (2.0 - l) * phi2 * a2 / cp.gamma;
  const cplx p2 = (quad + lin3 * a3) / cp.gamma;
  const cplx q2 = (quad + lin3 * (2.0 * a2 * a2 - a3)) / cp.gamma;
  return finish_tuple(p1, p2, q2, cp);
}

FeasibilityTuple feasibility_map_k(cplx a2, cplx a3, const ClassParams& cp, double phi2,
                                   double phi3) {
  const double l = cp.lambda;
  const cplx quad = 4.0 * (l * l - 2.0 * l) * phi2 * phi2 * a2 * a2;
  const double lin3 = 3.0 * (3.0 - l) * phi3;
  const cplx p1 = 2.0 * (2.0 - l) * phi2 * a2 / cp.gamma;
  const cplx p2 = (quad + lin3 * a3) / cp.gamma;
  const cplx q2 = (quad + lin3 * (2.0 * a2 * a2 - a3)) / cp.gamma;
  return finish_tuple(p1, p2, q2, cp);
}

FeasibilityTuple feasibility_map(TransformKind kind, cplx a2, cplx a3, const ClassParams& cp,
                                 double phi2, double phi3) {
  return kind == TransformKind::S ? feasibility_map_s(a2, a3, cp, phi2, phi3)
                                  : feasibility_map_k(a2, a3, cp, phi2, phi3);
}

A3Reconstruction a3_reconstructions(TransformKind kind, cplx a2, cplx a3, const ClassParams& cp,
                                    double phi2, double phi3) {
  const FeasibilityTuple t = feasibility_map(kind, a2, a3, cp, phi2, phi3);
  const double l = cp.lambda;
  const cplx P1 = cp.gamma * t.p1;
  const cplx P2 = cp.gamma * t.p2;
  const cplx Q2 = cp.gamma * t.q2;

  // Coefficient equations in the unknowns a2^2, a3:
  //   P2 = A a2^2 + B a3,  Q2 = A a2^2 + B (2 a2^2 - a3),  P1 = C a2,
  // with (A, B, C) the quadratic, linear and a2 factors of the family.
  double A, B, C;
  if (kind == TransformKind::S) {
    A = (l * l - 2.0 * l) * phi2 * phi2;
    B = (3.0 - l) * phi3;
    C = (2.0 - l) * phi2;
  } else {
    A = 4.0 * (l * l - 2.0 * l) * phi2 * phi2;
    B = 3.0 * (3.0 - l) * phi3;
    C = 2.0 * (2.0 - l) * phi2;
  }
  const cplx a2sq = (P1 / C) * (P1 / C);

  A3Reconstruction out;
  // (p1, p2):  B a3 = P2 - A a2^2.
  if (std::abs(B) >= kDenomGuard) out.routes[0] = (P2 - A * a2sq) / B;
  // (p2, q2):  a3 = a2^2 + (P2 - Q2) / (2B),  a2^2 = (P2 + Q2) / (2 (A + B)).
  if (std::abs(A + B) >= kDenomGuard && std::abs(B) >= kDenomGuard) {
    out.routes[1] = (P2 + Q2) / (2.0 * (A + B)) + (P2 - Q2) / (2.0 * B);
  }
  // (p1, q2):  B a3 = (A + 2B) a2^2 - Q2.
  if (std::abs(B) >= kDenomGuard) out.routes[2] = ((A + 2.0 * B) * a2sq - Q2) / B;
  return out;
}

SearchReport extremal_search(TransformKind kind, const ClassParams& cp, const HohlovParams& hp,
                             long samples, std::uint64_t seed) {
  if (samples < 10000) throw std::invalid_argument("extremal_search: need samples >= 10^4");

  const double phi2 = phi_n(hp, 2);
  const double phi3 = phi_n(hp, 3);
  const BoundReport bounds = coefficient_bounds(kind, cp, hp);
  const auto map = [&](cplx a2, cplx a3) { return feasibility_map(kind, a2, a3, cp, phi2, phi3); };

  const FeasibilityTuple origin = map(cplx{}, cplx{});
  if (!origin.feasible) {
    throw NoFeasibleSample("extremal_search: the origin is infeasible; parameters are corrupt");
  }

  const double envelope_a2 = 1.5 * bounds.a2_bound;
  const double envelope_a3 = 1.5 * bounds.a3_bound;

  std::mt19937_64 rng(seed);
  const auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  Candidate best_a2{cplx{}, cplx{}, 0.0, origin.slack};
  Candidate best_a3{cplx{}, cplx{}, 0.0, origin.slack};
  long feasible_count = 0;

  for (long i = 0; i < samples; ++i) {
    const cplx a2 = std::polar(u01() * envelope_a2, 2.0 * pi * u01());
    const cplx a3 = std::polar(u01() * envelope_a3, 2.0 * pi * u01());
    const FeasibilityTuple t = map(a2, a3);
    if (!t.feasible) continue;
    ++feasible_count;
    if (std::abs(a2) > best_a2.objective) best_a2 = {a2, a3, std::abs(a2), t.slack};
    if (std::abs(a3) > best_a3.objective) best_a3 = {a2, a3, std::abs(a3), t.slack};
  }

  const auto obj_a2 = [](cplx a2, cplx) { return std::abs(a2); };
  const auto obj_a3 = [](cplx, cplx a3) { return std::abs(a3); };
  best_a2 = hill_climb(map, obj_a2, best_a2, 0.1 * bounds.a2_bound, 0.1 * bounds.a3_bound);
  best_a3 = hill_climb(map, obj_a3, best_a3, 0.1 * bounds.a2_bound, 0.1 * bounds.a3_bound);

  SearchReport report{};
  report.kind = kind;
  report.samples = samples;
  report.seed = seed;
  report.feasible_count = feasible_count;
  report.max_a2 = best_a2.objective;
  report.a2_witness = {best_a2.a2, best_a2.a3};
  report.max_a3 = best_a3.objective;
  report.a3_witness = {best_a3.a2, best_a3.a3};
  report.a2_bound = bounds.a2_bound;
  report.a3_bound = bounds.a3_bound;
  report.a2_tightness = best_a2.objective / bounds.a2_bound;
  report.a3_tightness = best_a3.objective / bounds.a3_bound;
  report.envelope_a2 = envelope_a2;
  report.envelope_a3 = envelope_a3;
  report.envelope_covers_a2 = envelope_a2 >= bounds.a2_bound;
  return report;
}

}  // namespace hohlov
