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

#include "pdisc/channels.hpp"

#include <cmath>
#include <numbers>

namespace pdisc {

namespace {

void normalize_probs(double *p, size_t n) {
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (p[i] < 0.0 || p[i] > 1.0) {
            throw std::invalid_argument("channel probability outside [0, 1]");
        }
        sum += p[i];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("channel probabilities sum to " + std::to_string(sum) +
                                    ", expected 1");
    }
    for (size_t i = 0; i < n; ++i) {
        p[i] /= sum;
    }
}

} // namespace

PriorPair::PriorPair(double p1) : p1_(p1) {
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw std::invalid_argument("PriorPair: p1 must lie in [0, 1]");
    }
}

PauliChannel::PauliChannel(std::array<double, 4> probs) : probs_(probs) {
    normalize_probs(probs_.data(), 4);
}

GeneralizedPauliChannel::GeneralizedPauliChannel(int d, std::vector<double> probs)
    : d_(d), probs_(std::move(probs)) {
    if (d < 2) {
        throw std::invalid_argument("GeneralizedPauliChannel: d must be >= 2");
    }
    if (probs_.size() != static_cast<size_t>(d) * d) {
        throw std::invalid_argument("GeneralizedPauliChannel: expected d^2 probabilities");
    }
    normalize_probs(probs_.data(), probs_.size());
}

int channel_dim(const Channel &ch) {
    if (std::holds_alternative<PauliChannel>(ch)) {
        return 2;
    }
    return std::get<GeneralizedPauliChannel>(ch).dim();
}

std::vector<double> channel_probs(const Channel &ch) {
    if (const auto *pc = std::get_if<PauliChannel>(&ch)) {
        return {pc->probs().begin(), pc->probs().end()};
    }
    return std::get<GeneralizedPauliChannel>(ch).probs();
}

std::vector<ComplexMatrix> channel_unitaries(const Channel &ch) {
    std::vector<ComplexMatrix> us;
    if (std::holds_alternative<PauliChannel>(ch)) {
        for (int n = 0; n < 4; ++n) {
            us.push_back(pauli_matrix(n));
        }
    } else {
        const int d = std::get<GeneralizedPauliChannel>(ch).dim();
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                us.push_back(weyl_operator(d, m, n));
            }
        }
    }
    return us;
}

ComplexMatrix pauli_matrix(int n) {
    ComplexMatrix m(2);
    switch (n) {
        case 0:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case 1:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = cxd(0.0, -1.0);
            m(1, 0) = cxd(0.0, 1.0);
            break;
        case 3:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw std::out_of_range("pauli_matrix: index must be in 0..3");
    }
    return m;
}

ComplexMatrix weyl_operator(int d, int m, int n) {
    if (d < 2) {
        throw std::invalid_argument("weyl_operator: d must be >= 2");
    }
    if (m < 0 || m >= d || n < 0 || n >= d) {
        throw std::out_of_range("weyl_operator: indices must lie in 0..d-1");
    }
    ComplexMatrix u(d);
    const double w = 2.0 * std::numbers::pi / d;
    // (X^m Z^n)|k> = w^{nk} |k+m mod d>
    for (int k = 0; k < d; ++k) {
        u((k + m) % d, k) = std::polar(1.0, w * n * k);
    }
    return u;
}

namespace {

DensityMatrix mix_conjugations(const std::vector<double> &probs,
                               const std::vector<ComplexMatrix> &us, const DensityMatrix &rho) {
    ComplexMatrix acc(rho.dim());
    for (size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] == 0.0) {
            continue;
        }
        acc += probs[i] * (us[i] * rho.mat() * us[i].adjoint());
    }
    return DensityMatrix(acc);
}

} // namespace

DensityMatrix apply(const Channel &ch, const DensityMatrix &rho) {
    if (rho.dim() != channel_dim(ch)) {
        throw std::invalid_argument("apply: state dimension does not match channel");
    }
    return mix_conjugations(channel_probs(ch), channel_unitaries(ch), rho);
}

DensityMatrix apply_extended(const Channel &ch, const DensityMatrix &xi) {
    const int d = channel_dim(ch);
    if (xi.dim() != d * d) {
        throw std::invalid_argument("apply_extended: state dimension must be d^2");
    }
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    std::vector<ComplexMatrix> extended;
    for (const auto &u : channel_unitaries(ch)) {
        extended.push_back(tensor(u, eye));
    }
    return mix_conjugations(channel_probs(ch), extended, xi);
}

} // namespace pdisc
