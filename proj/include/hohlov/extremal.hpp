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

#include <array>
#include <cstdint>
#include <optional>

#include "hohlov/bounds.hpp"
#include "hohlov/classes.hpp"

namespace hohlov {

/// Images of a candidate (a2, a3) under the coefficient equations of the
/// class transforms, with the coefficient-cap verdict.
///
/// S form:  p1 = (2-l) phi2 a2 / gamma,
///          p2 = ((l^2-2l) phi2^2 a2^2 + (3-l) phi3 a3) / gamma,
///          q1 = -p1,
///          q2 = ((l^2-2l) phi2^2 a2^2 + (3-l) phi3 (2 a2^2 - a3)) / gamma.
/// K form:  the same shape with factors 2(2-l) phi2, 4(l^2-2l) phi2^2, 3(3-l) phi3.
///
/// feasible holds iff max(|p1|, |p2|, |q2|) <= m (1 - beta); slack is the margin.
struct FeasibilityTuple {
  cplx p1;
  cplx p2;
  cplx q1;  // always exactly -p1
  cplx q2;
  bool feasible;
  double slack;
};

FeasibilityTuple feasibility_map_s(cplx a2, cplx a3, const ClassParams& cp, double phi2,
                                   double phi3);
FeasibilityTuple feasibility_map_k(cplx a2, cplx a3, const ClassParams& cp, double phi2,
                                   double phi3);
FeasibilityTuple feasibility_map(TransformKind kind, cplx a2, cplx a3, const ClassParams& cp,
                                 double phi2, double phi3);

/// a3 rebuilt from the tuple along the three independent routes
/// (p1,p2), (p2,q2), (p1,q2). A route whose denominator modulus falls below
/// kDenomGuard is reported as absent rather than failing the call.
struct A3Reconstruction {
  std::array<std::optional<cplx>, 3> routes;
};

A3Reconstruction a3_reconstructions(TransformKind kind, cplx a2, cplx a3, const ClassParams& cp,
                                    double phi2, double phi3);

struct Witness {
  cplx a2;
  cplx a3;
};

/// Outcome of the brute-force feasibility search.
struct SearchReport {
  TransformKind kind;
  long samples;
  std::uint64_t seed;
  long feasible_count;
  double max_a2;
  Witness a2_witness;
  double max_a3;
  Witness a3_witness;
  double a2_bound;
  double a3_bound;
  double a2_tightness;  // max_a2 / a2_bound
  double a3_tightness;
  double envelope_a2;  // sampling radii, 1.5x the bounds
  double envelope_a3;
  // Every feasible point provably satisfies |a2| <= a2_bound (the |p1| cap
  // and the |p2 + q2| cap), so an envelope of 1.5x the bound contains the
  // whole feasible a2 range. Recorded, and asserted at construction.
  bool envelope_covers_a2;
};

/// Samples (a2, a3) uniformly in modulus and phase inside the envelope,
/// keeps the feasible extremes of |a2| and |a3|, then refines each with a
/// 200-iteration coordinate hill-climb (shrinking step, feasible moves only,
/// slack as the tie-break on the flat coordinate pairs).
///
/// Deterministic: the same seed yields the identical report. Requires
/// samples >= 10^4; throws NoFeasibleSample if the origin itself fails.
SearchReport extremal_search(TransformKind kind, const ClassParams& cp, const HohlovParams& hp,
                             long samples, std::uint64_t seed);

}  // namespace hohlov
