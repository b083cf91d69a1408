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

#include "pdisc/channels.hpp"
#include "pdisc/random.hpp"

using namespace pdisc;

namespace {

DensityMatrix ket0() { return outer(PureState({cxd(1, 0), cxd(0, 0)})); }

const double kS = 1.0 / std::sqrt(2.0);

DensityMatrix bell_phi_plus() {
    return outer(PureState({cxd(kS, 0), cxd(0, 0), cxd(0, 0), cxd(kS, 0)}));
}

} // namespace

TEST_CASE("pauli_matrix basics") {
    ComplexMatrix id = pauli_matrix(0);
    id -= ComplexMatrix::identity(2);
    CHECK(id.max_abs() == 0.0);

    const ComplexMatrix sx = pauli_matrix(1);
    CHECK(sx(0, 1) == cxd(1, 0));
    CHECK(sx(1, 0) == cxd(1, 0));

    const ComplexMatrix sz = pauli_matrix(3);
    CHECK(sz(0, 0) == cxd(1, 0));
    CHECK(sz(1, 1) == cxd(-1, 0));

    for (int m = 0; m < 4; ++m) {
        CHECK(pauli_matrix(m).is_unitary(1e-14));
        CHECK(pauli_matrix(m).asymmetry() == 0.0);
        for (int n = 0; n < 4; ++n) {
            const cxd tr = (pauli_matrix(m).adjoint() * pauli_matrix(n)).trace();
            CHECK(std::abs(tr - cxd(m == n ? 2.0 : 0.0, 0.0)) < 1e-14);
        }
    }
    CHECK_THROWS_AS(pauli_matrix(4), std::out_of_range);
}

TEST_CASE("weyl_operator definition and orthogonality") {
    ComplexMatrix w00 = weyl_operator(2, 0, 0);
    w00 -= ComplexMatrix::identity(2);
    CHECK(w00.max_abs() == 0.0);

    ComplexMatrix w10 = weyl_operator(2, 1, 0);
    w10 -= pauli_matrix(1);
    CHECK(w10.max_abs() < 1e-15);

    const ComplexMatrix shift = weyl_operator(3, 1, 0);
    CHECK(shift(1, 0) == cxd(1, 0));
    CHECK(shift(2, 1) == cxd(1, 0));
    CHECK(shift(0, 2) == cxd(1, 0));

    for (const int d : {2, 3, 5}) {
        std::vector<ComplexMatrix> us;
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                us.push_back(weyl_operator(d, m, n));
                CHECK(us.back().is_unitary(1e-12));
            }
        }
        for (size_t a = 0; a < us.size(); ++a) {
            for (size_t b = 0; b < us.size(); ++b) {
                const cxd tr = (us[a].adjoint() * us[b]).trace();
                CHECK(std::abs(tr - cxd(a == b ? d : 0.0, 0.0)) < 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(weyl_operator(3, 3, 0), std::out_of_range);
}

TEST_CASE("apply on standard channels") {
    Rng rng(11);
    const Channel identity_ch = PauliChannel({1, 0, 0, 0});
    const DensityMatrix rho = random_density(2, rng);
    ComplexMatrix diff = apply(identity_ch, rho).mat();
    diff -= rho.mat();
    CHECK(diff.max_abs() < 1e-14);

    const Channel depol = PauliChannel({0.25, 0.25, 0.25, 0.25});
    const DensityMatrix out = apply(depol, ket0());
    CHECK(out(0, 0).real() == doctest::Approx(0.5));
    CHECK(out(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(out(0, 1)) < 1e-15);

    const Channel bitflip = PauliChannel({0.8, 0.2, 0, 0});
    const DensityMatrix flipped = apply(bitflip, ket0());
    CHECK(flipped(0, 0).real() == doctest::Approx(0.8));
    CHECK(flipped(1, 1).real() == doctest::Approx(0.2));
}

TEST_CASE("apply_extended on Bell input") {
    const DensityMatrix bell = bell_phi_plus();

    ComplexMatrix diff = apply_extended(PauliChannel({1, 0, 0, 0}), bell).mat();
    diff -= bell.mat();
    CHECK(diff.max_abs() < 1e-14);

    const DensityMatrix mixed = apply_extended(PauliChannel({0.25, 0.25, 0.25, 0.25}), bell);
    ComplexMatrix md = mixed.mat();
    md -= 0.25 * ComplexMatrix::identity(4);
    CHECK(md.max_abs() < 1e-14);

    // Phase flip: term-by-term expansion as the oracle.
    const DensityMatrix phased = apply_extended(PauliChannel({0.7, 0, 0, 0.3}), bell);
    const ComplexMatrix zi = tensor(pauli_matrix(3), ComplexMatrix::identity(2));
    ComplexMatrix expected = 0.7 * bell.mat();
    expected += 0.3 * (zi * bell.mat() * zi.adjoint());
    ComplexMatrix pd = phased.mat();
    pd -= expected;
    CHECK(pd.max_abs() < 1e-14);
}

TEST_CASE("apply preserves trace and positivity on random pairs") {
    Rng rng(5150);
    for (int trial = 0; trial < 1000; ++trial) {
        const Channel ch = random_pauli_channel(rng);
        const DensityMatrix rho = random_density(2, rng);
        const DensityMatrix out = apply(ch, rho); // ctor enforces both properties
        CHECK(std::abs(out.mat().trace().real() - 1.0) < 1e-12);
    }
}

TEST_CASE("apply_extended factorizes on product states") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const Channel ch = random_pauli_channel(rng);
        const DensityMatrix rho = random_density(2, rng);
        const DensityMatrix tau = random_density(2, rng);
        const DensityMatrix joint = DensityMatrix(tensor(rho.mat(), tau.mat()));
        ComplexMatrix diff = apply_extended(ch, joint).mat();
        diff -= tensor(apply(ch, rho).mat(), tau.mat());
        CHECK(diff.max_abs() < 1e-12);
    }
}

TEST_CASE("d=2 Weyl channel matches the sigma-basis channel through the index map") {
    // Weyl flat order (I, Z, X, XZ); XZ = -i sigma_y so conjugation agrees.
    Rng rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<double> p = random_prob_vector(4, rng);
        const Channel weyl_ch = GeneralizedPauliChannel(2, p);
        const Channel sigma_ch = PauliChannel({p[0], p[2], p[3], p[1]});
        const DensityMatrix rho = random_density(2, rng);
        ComplexMatrix diff = apply(weyl_ch, rho).mat();
        diff -= apply(sigma_ch, rho).mat();
        CHECK(diff.max_abs() < 1e-12);
    }
}

TEST_CASE("channel construction validation") {
    CHECK_THROWS_AS(PauliChannel({0.5, 0.2, 0.1, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(PauliChannel({-0.1, 0.6, 0.3, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedPauliChannel(1, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedPauliChannel(3, {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PriorPair(1.5), std::invalid_argument);

    Rng rng(1);
    const DensityMatrix rho3 = random_density(3, rng);
    CHECK_THROWS_AS(apply(Channel(PauliChannel({1, 0, 0, 0})), rho3), std::invalid_argument);
    const DensityMatrix rho2 = random_density(2, rng);
    CHECK_THROWS_AS(apply_extended(Channel(PauliChannel({1, 0, 0, 0})), rho2),
                    std::invalid_argument);
}
