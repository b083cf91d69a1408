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

#include "pdisc/random.hpp"

#include <cmath>
#include <numbers>

namespace pdisc {

double Rng::uniform() {
    // 53-bit mantissa, in [0, 1).
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    // Box-Muller; the cosine branch only, to keep the stream simple.
    double u1 = uniform();
    while (u1 == 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cxd Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

PureState random_pure_state(int dim, Rng &rng) {
    std::vector<cxd> v(static_cast<size_t>(dim));
    double n2 = 0.0;
    for (auto &z : v) {
        z = rng.complex_gaussian();
        n2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &z : v) {
        z *= inv;
    }
    return PureState(std::move(v));
}

ComplexMatrix random_unitary(int dim, Rng &rng) {
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            g(r, c) = rng.complex_gaussian();
        }
    }
    // Modified Gram-Schmidt on columns.
    for (int c = 0; c < dim; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            cxd dot(0.0, 0.0);
            for (int r = 0; r < dim; ++r) {
                dot += std::conj(g(r, prev)) * g(r, c);
            }
            for (int r = 0; r < dim; ++r) {
                g(r, c) -= dot * g(r, prev);
            }
        }
        double n2 = 0.0;
        for (int r = 0; r < dim; ++r) {
            n2 += std::norm(g(r, c));
        }
        const double inv = 1.0 / std::sqrt(n2);
        for (int r = 0; r < dim; ++r) {
            g(r, c) *= inv;
        }
    }
    return g;
}

HermitianMatrix random_hermitian(int dim, Rng &rng) {
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r) {
        g(r, r) = rng.gaussian();
        for (int c = r + 1; c < dim; ++c) {
            const cxd z = rng.complex_gaussian();
            g(r, c) = z;
            g(c, r) = std::conj(z);
        }
    }
    return HermitianMatrix(g);
}

DensityMatrix random_density(int dim, Rng &rng) {
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            g(r, c) = rng.complex_gaussian();
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho *= cxd(1.0 / rho.trace().real(), 0.0);
    return DensityMatrix(rho);
}

std::vector<double> random_prob_vector(int len, Rng &rng) {
    // Normalized exponentials are uniform on the simplex.
    std::vector<double> p(static_cast<size_t>(len));
    double sum = 0.0;
    for (auto &x : p) {
        double u = rng.uniform();
        while (u == 0.0) {
            u = rng.uniform();
        }
        x = -std::log(u);
        sum += x;
    }
    for (auto &x : p) {
        x /= sum;
    }
    return p;
}

PauliChannel random_pauli_channel(Rng &rng) {
    const std::vector<double> p = random_prob_vector(4, rng);
    return PauliChannel({p[0], p[1], p[2], p[3]});
}

GeneralizedPauliChannel random_generalized_channel(int d, Rng &rng) {
    return GeneralizedPauliChannel(d, random_prob_vector(d * d, rng));
}

} // namespace pdisc
