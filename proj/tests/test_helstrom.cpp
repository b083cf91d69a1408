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

#include <cmath>

#include <doctest.h>

#include "pdisc/helstrom.hpp"
#include "pdisc/random.hpp"

using namespace pdisc;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

DensityMatrix ket0() { return outer(PureState({cxd(1, 0), cxd(0, 0)})); }
DensityMatrix ket1() { return outer(PureState({cxd(0, 0), cxd(1, 0)})); }
DensityMatrix plus() { return outer(PureState({cxd(kS, 0), cxd(kS, 0)})); }
DensityMatrix minus() { return outer(PureState({cxd(kS, 0), cxd(-kS, 0)})); }

TwoOutcomePovm z_basis_povm() {
    return {HermitianMatrix(ket0().mat()), HermitianMatrix(ket1().mat())};
}

TwoOutcomePovm trivial_povm_first() {
    return {HermitianMatrix(ComplexMatrix::identity(2)), HermitianMatrix(ComplexMatrix(2))};
}

} // namespace

TEST_CASE("error_probability of fixed measurements") {
    const PriorPair half(0.5);
    CHECK(error_probability(trivial_povm_first(), ket0(), plus(), half) ==
          doctest::Approx(0.5));
    CHECK(error_probability(z_basis_povm(), ket0(), ket1(), half) == doctest::Approx(0.0));
    CHECK(error_probability(z_basis_povm(), plus(), minus(), half) == doctest::Approx(0.5));
}

TEST_CASE("min_error_probability examples") {
    const DensityMatrix maximally_mixed(0.5 * ComplexMatrix::identity(2));
    CHECK(min_error_probability(maximally_mixed, maximally_mixed, PriorPair(0.3)) ==
          doctest::Approx(0.3).epsilon(1e-12));
    CHECK(min_error_probability(ket0(), ket1(), PriorPair(0.5)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // |0> vs |+> at even priors: (1 - sqrt(2)/2) / 2.
    CHECK(min_error_probability(ket0(), plus(), PriorPair(0.5)) ==
          doctest::Approx(0.5 * (1.0 - kS)).epsilon(1e-12));
}

TEST_CASE("optimal_measurement examples") {
    const TwoOutcomePovm orth = optimal_measurement(ket0(), ket1(), PriorPair(0.5));
    CHECK(std::abs(orth.p1()(0, 0) - cxd(1, 0)) < 1e-12);
    CHECK(std::abs(orth.p2()(1, 1) - cxd(1, 0)) < 1e-12);

    // Identical states, p1 = 0.7: the weighted difference is positive, so
    // always guess hypothesis 1.
    const DensityMatrix mixed(0.5 * ComplexMatrix::identity(2));
    const TwoOutcomePovm tie = optimal_measurement(mixed, mixed, PriorPair(0.7));
    ComplexMatrix d1 = tie.p1().mat();
    d1 -= ComplexMatrix::identity(2);
    CHECK(d1.max_abs() < 1e-12);
    CHECK(tie.p2().mat().max_abs() < 1e-12);
    CHECK(error_probability(tie, mixed, mixed, PriorPair(0.7)) == doctest::Approx(0.3));

    const TwoOutcomePovm best = optimal_measurement(ket0(), plus(), PriorPair(0.5));
    CHECK(error_probability(best, ket0(), plus(), PriorPair(0.5)) ==
          doctest::Approx(0.5 * (1.0 - kS)).epsilon(1e-10));
}

TEST_CASE("optimal measurement achieves the bound on random problems") {
    Rng rng(4242);
    for (const int dim : {2, 4}) {
        for (int trial = 0; trial < 500; ++trial) {
            const DensityMatrix rho1 = random_density(dim, rng);
            const DensityMatrix rho2 = random_density(dim, rng);
            const PriorPair priors(rng.uniform());
            const double bound = min_error_probability(rho1, rho2, priors);
            const double achieved =
                error_probability(optimal_measurement(rho1, rho2, priors), rho1, rho2, priors);
            CHECK(std::abs(achieved - bound) < 1e-10);
            CHECK(bound <= std::min(priors.p1(), priors.p2()) + 1e-12);

            // Symmetry under swapping hypotheses.
            CHECK(min_error_probability(rho2, rho1, PriorPair(priors.p2())) ==
                  doctest::Approx(bound).epsilon(1e-12));
        }
    }
}

TEST_CASE("no random projective measurement beats the bound") {
    Rng rng(1717);
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 2 + 2 * (trial % 2);
        const DensityMatrix rho1 = random_density(dim, rng);
        const DensityMatrix rho2 = random_density(dim, rng);
        const PriorPair priors(rng.uniform());
        const double bound = min_error_probability(rho1, rho2, priors);

        const ComplexMatrix u = random_unitary(dim, rng);
        const int rank = 1 + static_cast<int>(rng.uniform() * (dim - 1));
        ComplexMatrix p1(dim);
        for (int k = 0; k < rank; ++k) {
            for (int r = 0; r < dim; ++r) {
                for (int c = 0; c < dim; ++c) {
                    p1(r, c) += u(r, k) * std::conj(u(c, k));
                }
            }
        }
        ComplexMatrix p2 = ComplexMatrix::identity(dim);
        p2 -= p1;
        const TwoOutcomePovm povm{HermitianMatrix(p1, 1e-10), HermitianMatrix(p2, 1e-10)};
        CHECK(error_probability(povm, rho1, rho2, priors) >= bound - 1e-10);
    }
}

TEST_CASE("TwoOutcomePovm validation") {
    ComplexMatrix neg(2);
    neg(0, 0) = -0.5;
    neg(1, 1) = 0.5;
    ComplexMatrix compl2 = ComplexMatrix::identity(2);
    compl2 -= neg;
    CHECK_THROWS_AS(TwoOutcomePovm(HermitianMatrix(neg), HermitianMatrix(compl2)),
                    std::invalid_argument);

    CHECK_THROWS_AS(TwoOutcomePovm(HermitianMatrix(ComplexMatrix::identity(2)),
                                   HermitianMatrix(ComplexMatrix::identity(2))),
                    std::invalid_argument);
}
