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
#include <random>

#include "pdisc/channels.hpp"
#include "pdisc/qmat.hpp"

namespace pdisc {

/// Seeded source of reproducible samples. Built on mt19937_64 with hand-rolled
/// Box-Muller so streams are identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(); // [0, 1)
    double gaussian();
    cxd complex_gaussian();

  private:
    std::mt19937_64 gen_;
};

/// Uniform (Haar) random pure state: normalized complex-Gaussian vector.
PureState random_pure_state(int dim, Rng &rng);

/// Haar-ish random unitary via Gram-Schmidt of a complex-Gaussian matrix.
ComplexMatrix random_unitary(int dim, Rng &rng);

/// Gaussian entries symmetrized.
HermitianMatrix random_hermitian(int dim, Rng &rng);

/// Mixture G G^dag / Tr, full rank almost surely.
DensityMatrix random_density(int dim, Rng &rng);

/// Probability vector of the given length, uniform on the simplex.
std::vector<double> random_prob_vector(int len, Rng &rng);

PauliChannel random_pauli_channel(Rng &rng);
GeneralizedPauliChannel random_generalized_channel(int d, Rng &rng);

} // namespace pdisc
