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

#include <optional>
#include <utility>
#include <vector>

#include "pdisc/channels.hpp"
#include "pdisc/helstrom.hpp"
#include "pdisc/qmat.hpp"

namespace pdisc {

/// Two same-kind, same-dimension channels plus priors.
class DiscriminationProblem {
  public:
    DiscriminationProblem(Channel channel1, Channel channel2, PriorPair priors);

    const Channel &channel1() const { return channel1_; }
    const Channel &channel2() const { return channel2_; }
    const PriorPair &priors() const { return priors_; }
    int dim() const { return channel_dim(channel1_); }

  private:
    Channel channel1_;
    Channel channel2_;
    PriorPair priors_;
};

/// Signed weight differences r_n = p1 q_n^(1) - p2 q_n^(2), in the channels'
/// native index order.
struct RVector {
    std::vector<double> values;
};

/// Bloch-sphere parametrization of a qubit pure state,
/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct BlochAngles {
    double theta; // [0, pi]
    double phi;   // [0, 2 pi)
};

enum class Axis { Z, X, Y };
const char *axis_name(Axis a);

struct DiscriminationResult {
    double pe_assisted;
    std::optional<double> pe_unassisted;     // qubit only
    std::optional<Axis> optimal_axis;        // qubit only
    bool entanglement_required;              // qubit only; false for d > 2
    TwoOutcomePovm assisted_povm;
    std::optional<TwoOutcomePovm> unassisted_povm; // qubit only
};

RVector r_vector(const DiscriminationProblem &problem);

/// Entanglement-assisted optimum (1 - sum_n |r_n|) / 2, clamped to [0, 1/2].
double assisted_pe(const RVector &r);

/// (I (x) V) (1/sqrt(d)) sum_n |n>|n>.
PureState max_entangled(int d, const std::optional<ComplexMatrix> &local_unitary = {});

/// A = sum_n r_n (U_n (x) I) |Psi><Psi| (U_n^dag (x) I) over the problem's own
/// unitary set; diagonal in the generalized Bell basis with eigenvalues {r_n}.
HermitianMatrix discrimination_operator(const DiscriminationProblem &problem);

/// Degenerate Bell measurement: P1 collects the Bell projectors with
/// r_n > 1e-12, P2 the rest (zeros included). Index convention matches
/// r_vector: sigma order for d = 2, Weyl order for d > 2.
TwoOutcomePovm bell_povm(const RVector &r, int d);

/// The 2x2 operator sum_n r_n sigma_n |psi><psi| sigma_n for the Bloch state.
HermitianMatrix xi_operator(const RVector &r, const BlochAngles &angles);

/// Closed-form eigenvalues of xi_operator, larger first.
std::pair<double, double> xi_eigenvalues(const RVector &r, const BlochAngles &angles);

/// Unassisted optimum (1 - M) / 2 with
/// M = max{|r0+r3|+|r1+r2|, |r0+r1|+|r2+r3|, |r0+r2|+|r1+r3|}; the candidates
/// correspond to sigma_z, sigma_x, sigma_y eigenstate inputs. Ties resolve in
/// order z, x, y.
std::pair<double, Axis> unassisted_pe(const RVector &r);

/// Helstrom measurement on the channel outputs of the winning axis'
/// +1-eigenstate; achieves unassisted_pe.
TwoOutcomePovm unassisted_povm(const DiscriminationProblem &problem);

/// True iff all |r_n| > 1e-12 and exactly three share a sign, i.e. the
/// thresholded product r0 r1 r2 r3 is negative.
bool entanglement_needed(const RVector &r);

/// For a possibly non-orthogonal unitary set: (lower, upper) bounds on the
/// assisted optimum, lower = (1 - sum|r_n|)/2 and upper = (1 - ||A||_1)/2
/// with A built on the maximally entangled input.
std::pair<double, double> nonorthogonal_bounds(const std::vector<ComplexMatrix> &unitaries,
                                               const RVector &r);

/// Full closed-form solution. Unassisted fields are absent for d > 2 (no
/// closed form is known there).
DiscriminationResult solve(const DiscriminationProblem &problem);

/// Reorders a Weyl-indexed length-4 r-vector (I, Z, X, XZ) into sigma order
/// (I, x, y, z); XZ acts as sigma_y up to phase.
RVector weyl_to_sigma_order(const RVector &r);

} // namespace pdisc
