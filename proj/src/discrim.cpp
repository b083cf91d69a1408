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

#include "pdisc/discrim.hpp"

#include <algorithm>
#include <cmath>

namespace pdisc {

namespace {

constexpr double kSignThreshold = 1e-12;

void require_qubit(const RVector &r) {
    if (r.values.size() != 4) {
        throw std::invalid_argument("expected a qubit r-vector of length 4");
    }
}

} // namespace

DiscriminationProblem::DiscriminationProblem(Channel channel1, Channel channel2, PriorPair priors)
    : channel1_(std::move(channel1)), channel2_(std::move(channel2)), priors_(priors) {
    if (channel1_.index() != channel2_.index()) {
        throw std::invalid_argument("DiscriminationProblem: channels must be the same kind");
    }
    if (channel_dim(channel1_) != channel_dim(channel2_)) {
        throw std::invalid_argument("DiscriminationProblem: channel dimensions differ");
    }
}

const char *axis_name(Axis a) {
    switch (a) {
        case Axis::Z:
            return "z";
        case Axis::X:
            return "x";
        case Axis::Y:
            return "y";
    }
    return "?";
}

RVector r_vector(const DiscriminationProblem &problem) {
    const std::vector<double> q1 = channel_probs(problem.channel1());
    const std::vector<double> q2 = channel_probs(problem.channel2());
    RVector r;
    r.values.resize(q1.size());
    for (size_t n = 0; n < q1.size(); ++n) {
        r.values[n] = problem.priors().p1() * q1[n] - problem.priors().p2() * q2[n];
    }
    return r;
}

double assisted_pe(const RVector &r) {
    // Compensated (Neumaier) summation: exact cancellation such as
    // sum |r_n| = 1 for perfectly discriminable channels survives rounding.
    double s = 0.0;
    double c = 0.0;
    for (const double v : r.values) {
        const double a = std::abs(v);
        const double t = s + a;
        c += (std::abs(s) >= a) ? (s - t) + a : (a - t) + s;
        s = t;
    }
    s += c;
    return std::clamp(0.5 * (1.0 - s), 0.0, 0.5);
}

PureState max_entangled(int d, const std::optional<ComplexMatrix> &local_unitary) {
    if (d < 2) {
        throw std::invalid_argument("max_entangled: d must be >= 2");
    }
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<cxd> amps(static_cast<size_t>(d) * d, cxd(0.0, 0.0));
    if (local_unitary) {
        if (local_unitary->dim() != d || !local_unitary->is_unitary(1e-10)) {
            throw std::invalid_argument("max_entangled: local operator is not a d x d unitary");
        }
        // (I (x) V) sum_n |n>|n> = sum_n |n> (x) V|n>
        for (int n = 0; n < d; ++n) {
            for (int j = 0; j < d; ++j) {
                amps[static_cast<size_t>(n) * d + j] = a * (*local_unitary)(j, n);
            }
        }
    } else {
        for (int n = 0; n < d; ++n) {
            amps[static_cast<size_t>(n) * d + n] = a;
        }
    }
    return PureState(std::move(amps));
}

namespace {

// (U (x) I)|Psi><Psi|(U^dag (x) I) as a projector matrix.
ComplexMatrix bell_projector(const ComplexMatrix &u, int d) {
    const PureState psi = max_entangled(d);
    const ComplexMatrix ext = tensor(u, ComplexMatrix::identity(d));
    std::vector<cxd> amps(static_cast<size_t>(d) * d, cxd(0.0, 0.0));
    for (int i = 0; i < d * d; ++i) {
        for (int j = 0; j < d * d; ++j) {
            amps[static_cast<size_t>(i)] += ext(i, j) * psi.amp(j);
        }
    }
    ComplexMatrix proj(d * d);
    for (int i = 0; i < d * d; ++i) {
        for (int j = 0; j < d * d; ++j) {
            proj(i, j) = amps[static_cast<size_t>(i)] * std::conj(amps[static_cast<size_t>(j)]);
        }
    }
    return proj;
}

} // namespace

HermitianMatrix discrimination_operator(const DiscriminationProblem &problem) {
    const RVector r = r_vector(problem);
    const std::vector<ComplexMatrix> us = channel_unitaries(problem.channel1());
    const int d = problem.dim();
    ComplexMatrix a(d * d);
    for (size_t n = 0; n < us.size(); ++n) {
        if (r.values[n] == 0.0) {
            continue;
        }
        a += r.values[n] * bell_projector(us[n], d);
    }
    return HermitianMatrix(a);
}

TwoOutcomePovm bell_povm(const RVector &r, int d) {
    if (r.values.size() != static_cast<size_t>(d) * d) {
        throw std::invalid_argument("bell_povm: r length must equal d^2");
    }
    std::vector<ComplexMatrix> us;
    if (d == 2) {
        for (int n = 0; n < 4; ++n) {
            us.push_back(pauli_matrix(n));
        }
    } else {
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                us.push_back(weyl_operator(d, m, n));
            }
        }
    }
    ComplexMatrix p1(d * d);
    ComplexMatrix p2(d * d);
    for (size_t n = 0; n < us.size(); ++n) {
        const ComplexMatrix proj = bell_projector(us[n], d);
        if (r.values[n] > kSignThreshold) {
            p1 += proj;
        } else {
            p2 += proj;
        }
    }
    return TwoOutcomePovm(HermitianMatrix(p1), HermitianMatrix(p2));
}

HermitianMatrix xi_operator(const RVector &r, const BlochAngles &angles) {
    require_qubit(r);
    const double r0 = r.values[0], r1 = r.values[1], r2 = r.values[2], r3 = r.values[3];
    const double c2 = std::cos(angles.theta / 2.0) * std::cos(angles.theta / 2.0);
    const double s2 = std::sin(angles.theta / 2.0) * std::sin(angles.theta / 2.0);
    const double st = std::sin(angles.theta);
    const cxd eip = std::polar(1.0, angles.phi);

    ComplexMatrix xi(2);
    xi(0, 0) = (r0 + r3) * c2 + (r1 + r2) * s2;
    xi(1, 1) = (r0 + r3) * s2 + (r1 + r2) * c2;
    xi(0, 1) = 0.5 * st * ((r0 - r3) * std::conj(eip) + (r1 - r2) * eip);
    xi(1, 0) = std::conj(xi(0, 1));
    return HermitianMatrix(xi);
}

std::pair<double, double> xi_eigenvalues(const RVector &r, const BlochAngles &angles) {
    require_qubit(r);
    const double r0 = r.values[0], r1 = r.values[1], r2 = r.values[2], r3 = r.values[3];
    const double ct = std::cos(angles.theta);
    const double st = std::sin(angles.theta);
    const double sum = r0 + r1 + r2 + r3;
    const double dz = r0 + r3 - r1 - r2;
    const double a = r0 - r3;
    const double b = r1 - r2;
    const double disc = ct * ct * dz * dz +
                        st * st * (a * a + b * b + 2.0 * std::cos(2.0 * angles.phi) * a * b);
    const double root = std::sqrt(std::max(0.0, disc));
    return {0.5 * (sum + root), 0.5 * (sum - root)};
}

std::pair<double, Axis> unassisted_pe(const RVector &r) {
    require_qubit(r);
    const double r0 = r.values[0], r1 = r.values[1], r2 = r.values[2], r3 = r.values[3];
    const double cz = std::abs(r0 + r3) + std::abs(r1 + r2);
    const double cx = std::abs(r0 + r1) + std::abs(r2 + r3);
    const double cy = std::abs(r0 + r2) + std::abs(r1 + r3);

    double m = cz;
    Axis axis = Axis::Z;
    if (cx > m) {
        m = cx;
        axis = Axis::X;
    }
    if (cy > m) {
        m = cy;
        axis = Axis::Y;
    }
    return {std::clamp(0.5 * (1.0 - m), 0.0, 0.5), axis};
}

namespace {

PureState axis_eigenstate(Axis axis) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (axis) {
        case Axis::Z:
            return PureState({cxd(1.0, 0.0), cxd(0.0, 0.0)});
        case Axis::X:
            return PureState({cxd(s, 0.0), cxd(s, 0.0)});
        case Axis::Y:
            return PureState({cxd(s, 0.0), cxd(0.0, s)});
    }
    throw std::logic_error("unreachable");
}

// Native-order r-vector converted to sigma order for qubit problems.
RVector sigma_order_r(const DiscriminationProblem &problem) {
    RVector r = r_vector(problem);
    if (std::holds_alternative<GeneralizedPauliChannel>(problem.channel1())) {
        r = weyl_to_sigma_order(r);
    }
    return r;
}

} // namespace

RVector weyl_to_sigma_order(const RVector &r) {
    require_qubit(r);
    // Weyl flat order (m*2+n) is I, Z, X, XZ; XZ = -i sigma_y.
    return RVector{{r.values[0], r.values[2], r.values[3], r.values[1]}};
}

TwoOutcomePovm unassisted_povm(const DiscriminationProblem &problem) {
    if (problem.dim() != 2) {
        throw std::invalid_argument("unassisted_povm: only qubit problems are supported");
    }
    const RVector r = sigma_order_r(problem);
    const auto [pe, axis] = unassisted_pe(r);
    const DensityMatrix input = outer(axis_eigenstate(axis));
    return optimal_measurement(apply(problem.channel1(), input), apply(problem.channel2(), input),
                               problem.priors());
}

bool entanglement_needed(const RVector &r) {
    require_qubit(r);
    double prod = 1.0;
    for (const double v : r.values) {
        prod *= (std::abs(v) <= kSignThreshold) ? 0.0 : v;
    }
    return prod < 0.0;
}

std::pair<double, double> nonorthogonal_bounds(const std::vector<ComplexMatrix> &unitaries,
                                               const RVector &r) {
    if (unitaries.empty() || unitaries.size() != r.values.size()) {
        throw std::invalid_argument("nonorthogonal_bounds: unitary count must match r length");
    }
    const int d = unitaries.front().dim();
    for (const auto &u : unitaries) {
        if (u.dim() != d || !u.is_unitary(1e-10)) {
            throw std::invalid_argument("nonorthogonal_bounds: inputs must be d x d unitaries");
        }
    }
    double sum_abs = 0.0;
    ComplexMatrix a(d * d);
    for (size_t n = 0; n < unitaries.size(); ++n) {
        sum_abs += std::abs(r.values[n]);
        if (r.values[n] != 0.0) {
            a += r.values[n] * bell_projector(unitaries[n], d);
        }
    }
    const double lower = 0.5 * (1.0 - sum_abs);
    const double upper = 0.5 * (1.0 - trace_norm(HermitianMatrix(a)));
    return {lower, upper};
}

DiscriminationResult solve(const DiscriminationProblem &problem) {
    const int d = problem.dim();
    const RVector r = r_vector(problem);
    const double pe_a = assisted_pe(r);

    if (d == 2) {
        const RVector rs = sigma_order_r(problem);
        const auto [pe_u, axis] = unassisted_pe(rs);
        return DiscriminationResult{
            pe_a,
            pe_u,
            axis,
            entanglement_needed(rs),
            bell_povm(rs, 2),
            unassisted_povm(problem),
        };
    }
    return DiscriminationResult{
        pe_a, std::nullopt, std::nullopt, false, bell_povm(r, d), std::nullopt,
    };
}

} // namespace pdisc
