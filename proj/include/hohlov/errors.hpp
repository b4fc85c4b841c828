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

#include <stdexcept>
#include <string>

namespace hohlov {

/// Divisor series has a (numerically) vanishing constant term.
struct DivisionBySingularSeries : std::runtime_error {
  explicit DivisionBySingularSeries(const std::string& what) : std::runtime_error(what) {}
};

/// compose(f, g) needs g(0) = 0; anything else has no Taylor meaning here.
struct CompositionRequiresZeroConstant : std::runtime_error {
  explicit CompositionRequiresZeroConstant(const std::string& what) : std::runtime_error(what) {}
};

/// The order parameter beta must lie in [0, 1).
struct BetaOutOfRange : std::domain_error {
  explicit BetaOutOfRange(const std::string& what) : std::domain_error(what) {}
};

/// Running Pochhammer product left the double range.
struct PochhammerOverflow : std::overflow_error {
  explicit PochhammerOverflow(const std::string& what) : std::overflow_error(what) {}
};

/// A reconstruction denominator is numerically zero.
struct DegenerateDenominator : std::runtime_error {
  explicit DegenerateDenominator(const std::string& what) : std::runtime_error(what) {}
};

/// The origin (a2, a3) = (0, 0) tested infeasible; parameters are corrupt.
struct NoFeasibleSample : std::logic_error {
  explicit NoFeasibleSample(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hohlov
