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

#include <array>
#include <variant>
#include <vector>

#include "pdisc/qmat.hpp"

namespace pdisc {

/// Prior probabilities (p1, 1 - p1) of the two hypotheses.
class PriorPair {
  public:
    explicit PriorPair(double p1);
    double p1() const { return p1_; }
    double p2() const { return 1.0 - p1_; }

  private:
    double p1_;
};

/// Qubit channel rho -> sum_n q_n sigma_n rho sigma_n over the Hermitian
/// Pauli basis {I, sigma_x, sigma_y, sigma_z}. Probabilities with
/// normalization drift up to 1e-12 are renormalized at construction.
class PauliChannel {
  public:
    explicit PauliChannel(std::array<double, 4> probs);

    double prob(int n) const { return probs_[static_cast<size_t>(n)]; }
    const std::array<double, 4> &probs() const { return probs_; }

  private:
    std::array<double, 4> probs_;
};

/// Dimension-d mixture of Weyl unitaries X^m Z^n, flattened index m*d + n.
class GeneralizedPauliChannel {
  public:
    GeneralizedPauliChannel(int d, std::vector<double> probs);

    int dim() const { return d_; }
    double prob(int m, int n) const { return probs_[static_cast<size_t>(m) * d_ + n]; }
    const std::vector<double> &probs() const { return probs_; }

  private:
    int d_;
    std::vector<double> probs_;
};

using Channel = std::variant<PauliChannel, GeneralizedPauliChannel>;

int channel_dim(const Channel &ch);
/// Mixing probabilities in the channel's native index order.
std::vector<double> channel_probs(const Channel &ch);
/// The channel's unitary Kraus directions, in the same order as
/// channel_probs: sigma_n for PauliChannel, X^m Z^n for the generalized case.
std::vector<ComplexMatrix> channel_unitaries(const Channel &ch);

/// Standard Pauli matrix; n in {0,1,2,3} = {I, sigma_x, sigma_y, sigma_z}.
ComplexMatrix pauli_matrix(int n);

/// X^m Z^n with X|k> = |k+1 mod d>, Z|k> = w^k |k>, w = exp(2 pi i / d).
/// No extra phase: Tr[U_a^dag U_b] = d delta_ab is all that is needed.
ComplexMatrix weyl_operator(int d, int m, int n);

DensityMatrix apply(const Channel &ch, const DensityMatrix &rho);
/// Channel on the first tensor factor, identity on the second;
/// xi has dimension d*d.
DensityMatrix apply_extended(const Channel &ch, const DensityMatrix &xi);

} // namespace pdisc
