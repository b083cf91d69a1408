// Copyright 2026 The pauli-discrim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pdisc/discrim.hpp"

namespace pdisc {

/// Brute-force search parameters. The seed is part of every report so runs
/// are reproducible bit for bit.
struct SearchConfig {
    int grid_theta = 181;
    int grid_phi = 360;
    int restarts = 200;
    int refine_iters = 500;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
};

struct UnassistedEstimate {
    double pe;
    BlochAngles angles;
};

/// Direct minimization of the unassisted error over Bloch-sphere inputs:
/// exhaustive (theta, phi) grid followed by simplex refinement of the best
/// grid point.
UnassistedEstimate oracle_unassisted(const DiscriminationProblem &problem,
                                     const SearchConfig &cfg);

/// Direct minimization of the assisted error over bipartite pure inputs:
/// seeded random states in dimension d^2, best candidate refined by simplex
/// descent on the real-embedded amplitudes.
double oracle_assisted(const DiscriminationProblem &problem, const SearchConfig &cfg);

/// Direct minimization of the two-state error probability over projective
/// two-outcome measurements (random bases, all rank splits, plus the two
/// trivial POVMs), with simplex refinement of the best basis.
double oracle_state_discrimination(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                   const PriorPair &priors, const SearchConfig &cfg);

/// Nelder-Mead simplex descent; initial simplex is x0 plus step along each
/// coordinate. Stops on simplex collapse (diameter and value spread below
/// shrink_tol) or after max_iters iterations.
struct SimplexResult {
    std::vector<double> x;
    double value;
};
SimplexResult simplex_minimize(const std::function<double(const std::vector<double> &)> &f,
                               std::vector<double> x0, double step, int max_iters,
                               double shrink_tol = 1e-12);

} // namespace pdisc
