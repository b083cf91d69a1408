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

#include "pdisc/channels.hpp"
#include "pdisc/qmat.hpp"

namespace pdisc {

/// Two-outcome POVM: P1, P2 positive (eigenvalues >= -1e-10) with
/// P1 + P2 = I within 1e-10.
class TwoOutcomePovm {
  public:
    TwoOutcomePovm(HermitianMatrix p1, HermitianMatrix p2);

    const HermitianMatrix &p1() const { return p1_; }
    const HermitianMatrix &p2() const { return p2_; }
    int dim() const { return p1_.dim(); }

  private:
    HermitianMatrix p1_;
    HermitianMatrix p2_;
};

/// p1 Tr[rho1 P2] + p2 Tr[rho2 P1] -- the probability of guessing wrong with
/// the given measurement.
double error_probability(const TwoOutcomePovm &povm, const DensityMatrix &rho1,
                         const DensityMatrix &rho2, const PriorPair &priors);

/// Helstrom bound (1 - ||p1 rho1 - p2 rho2||_1) / 2.
double min_error_probability(const DensityMatrix &rho1, const DensityMatrix &rho2,
                             const PriorPair &priors);

/// Projectors on the positive (eigenvalues > 1e-12) and remaining eigenspaces
/// of p1 rho1 - p2 rho2; achieves the Helstrom bound. Zero eigenvalues go to
/// P2, which fixes a deterministic optimum.
TwoOutcomePovm optimal_measurement(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                   const PriorPair &priors);

} // namespace pdisc
