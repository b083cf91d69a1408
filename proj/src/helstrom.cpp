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

#include "pdisc/helstrom.hpp"

#include <cmath>

namespace pdisc {

TwoOutcomePovm::TwoOutcomePovm(HermitianMatrix p1, HermitianMatrix p2)
    : p1_(std::move(p1)), p2_(std::move(p2)) {
    if (p1_.dim() != p2_.dim()) {
        throw std::invalid_argument("TwoOutcomePovm: element dimensions differ");
    }
    for (const HermitianMatrix *p : {&p1_, &p2_}) {
        const EigResult e = hermitian_eig(*p);
        if (e.eigenvalues.back() < -1e-10) {
            throw std::invalid_argument("TwoOutcomePovm: element is not positive");
        }
    }
    ComplexMatrix defect = p1_.mat() + p2_.mat();
    defect -= ComplexMatrix::identity(p1_.dim());
    if (defect.max_abs() > 1e-10) {
        throw std::invalid_argument("TwoOutcomePovm: elements do not sum to identity");
    }
}

namespace {

double real_trace_product(const HermitianMatrix &a, const HermitianMatrix &b) {
    return (a.mat() * b.mat()).trace().real();
}

HermitianMatrix weighted_difference(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                    const PriorPair &priors) {
    if (rho1.dim() != rho2.dim()) {
        throw std::invalid_argument("state dimensions differ");
    }
    ComplexMatrix d = priors.p1() * rho1.mat();
    d -= priors.p2() * rho2.mat();
    return HermitianMatrix(d);
}

} // namespace

double error_probability(const TwoOutcomePovm &povm, const DensityMatrix &rho1,
                         const DensityMatrix &rho2, const PriorPair &priors) {
    if (povm.dim() != rho1.dim() || rho1.dim() != rho2.dim()) {
        throw std::invalid_argument("error_probability: dimension mismatch");
    }
    return priors.p1() * real_trace_product(rho1, povm.p2()) +
           priors.p2() * real_trace_product(rho2, povm.p1());
}

double min_error_probability(const DensityMatrix &rho1, const DensityMatrix &rho2,
                             const PriorPair &priors) {
    return 0.5 * (1.0 - trace_norm(weighted_difference(rho1, rho2, priors)));
}

TwoOutcomePovm optimal_measurement(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                   const PriorPair &priors) {
    const HermitianMatrix diff = weighted_difference(rho1, rho2, priors);
    const EigResult e = hermitian_eig(diff);
    const int n = diff.dim();

    ComplexMatrix p1(n);
    for (int k = 0; k < n; ++k) {
        if (e.eigenvalues[static_cast<size_t>(k)] <= 1e-12) {
            continue;
        }
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                p1(r, c) += e.eigenvectors(r, k) * std::conj(e.eigenvectors(c, k));
            }
        }
    }
    ComplexMatrix p2 = ComplexMatrix::identity(n);
    p2 -= p1;
    return TwoOutcomePovm(HermitianMatrix(p1), HermitianMatrix(p2));
}

} // namespace pdisc
