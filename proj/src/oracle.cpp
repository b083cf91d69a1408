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

#include "pdisc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdisc/helstrom.hpp"
#include "pdisc/random.hpp"

namespace pdisc {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const SearchConfig &cfg) {
    if (cfg.grid_theta < 2 || cfg.grid_phi < 2 || cfg.restarts < 1 || cfg.refine_iters < 0 ||
        cfg.tolerance <= 0.0) {
        throw std::invalid_argument("SearchConfig: all fields must be positive");
    }
}

PureState bloch_state(double theta, double phi) {
    return PureState({cxd(std::cos(theta / 2.0), 0.0),
                      std::polar(std::sin(theta / 2.0), phi)});
}

double output_error(const DiscriminationProblem &problem, const DensityMatrix &input,
                    bool extended) {
    const DensityMatrix out1 = extended ? apply_extended(problem.channel1(), input)
                                        : apply(problem.channel1(), input);
    const DensityMatrix out2 = extended ? apply_extended(problem.channel2(), input)
                                        : apply(problem.channel2(), input);
    return min_error_probability(out1, out2, problem.priors());
}

BlochAngles canonical_angles(double theta, double phi) {
    theta = std::fmod(theta, 2.0 * kPi);
    if (theta < 0.0) {
        theta += 2.0 * kPi;
    }
    if (theta > kPi) {
        // |psi(2pi - t, p)> = |psi(t, p + pi)> up to a global phase
        theta = 2.0 * kPi - theta;
        phi += kPi;
    }
    phi = std::fmod(phi, 2.0 * kPi);
    if (phi < 0.0) {
        phi += 2.0 * kPi;
    }
    return {theta, phi};
}

} // namespace

SimplexResult simplex_minimize(const std::function<double(const std::vector<double> &)> &f,
                               std::vector<double> x0, double step, int max_iters,
                               double shrink_tol) {
    const size_t n = x0.size();
    std::vector<std::vector<double>> verts(n + 1, x0);
    for (size_t i = 0; i < n; ++i) {
        verts[i + 1][i] += step;
    }
    std::vector<double> fv(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        fv[i] = f(verts[i]);
    }

    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

    for (int iter = 0; iter < max_iters; ++iter) {
        // Order best..worst (stable so ties keep insertion order).
        std::vector<size_t> idx(n + 1);
        for (size_t i = 0; i <= n; ++i) {
            idx[i] = i;
        }
        std::stable_sort(idx.begin(), idx.end(),
                         [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        {
            std::vector<std::vector<double>> v2(n + 1);
            std::vector<double> f2(n + 1);
            for (size_t i = 0; i <= n; ++i) {
                v2[i] = std::move(verts[idx[i]]);
                f2[i] = fv[idx[i]];
            }
            verts = std::move(v2);
            fv = std::move(f2);
        }

        double diam = 0.0;
        for (size_t i = 1; i <= n; ++i) {
            for (size_t k = 0; k < n; ++k) {
                diam = std::max(diam, std::abs(verts[i][k] - verts[0][k]));
            }
        }
        if (diam < shrink_tol && fv[n] - fv[0] < shrink_tol) {
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < n; ++k) {
                centroid[k] += verts[i][k];
            }
        }
        for (double &c : centroid) {
            c /= static_cast<double>(n);
        }

        auto blend = [&](double coeff) {
            std::vector<double> p(n);
            for (size_t k = 0; k < n; ++k) {
                p[k] = centroid[k] + coeff * (centroid[k] - verts[n][k]);
            }
            return p;
        };

        const std::vector<double> xr = blend(kReflect);
        const double fr = f(xr);
        if (fr < fv[0]) {
            const std::vector<double> xe = blend(kExpand);
            const double fe = f(xe);
            if (fe < fr) {
                verts[n] = xe;
                fv[n] = fe;
            } else {
                verts[n] = xr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            verts[n] = xr;
            fv[n] = fr;
        } else {
            const bool outside = fr < fv[n];
            const std::vector<double> xc = blend(outside ? kContract : -kContract);
            const double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                verts[n] = xc;
                fv[n] = fc;
            } else {
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t k = 0; k < n; ++k) {
                        verts[i][k] = verts[0][k] + kShrink * (verts[i][k] - verts[0][k]);
                    }
                    fv[i] = f(verts[i]);
                }
            }
        }
    }

    size_t best = 0;
    for (size_t i = 1; i <= verts.size() - 1; ++i) {
        if (fv[i] < fv[best]) {
            best = i;
        }
    }
    return {verts[best], fv[best]};
}

UnassistedEstimate oracle_unassisted(const DiscriminationProblem &problem,
                                     const SearchConfig &cfg) {
    validate(cfg);
    if (problem.dim() != 2) {
        throw std::invalid_argument("oracle_unassisted: only qubit problems are supported");
    }

    const auto pe_at = [&](double theta, double phi) {
        return output_error(problem, outer(bloch_state(theta, phi)), false);
    };

    double best_pe = 1.0;
    double best_theta = 0.0, best_phi = 0.0;
    const double dtheta = kPi / (cfg.grid_theta - 1);
    const double dphi = 2.0 * kPi / cfg.grid_phi;
    for (int i = 0; i < cfg.grid_theta; ++i) {
        for (int j = 0; j < cfg.grid_phi; ++j) {
            const double pe = pe_at(i * dtheta, j * dphi);
            if (pe < best_pe) { // strict: first grid index wins ties
                best_pe = pe;
                best_theta = i * dtheta;
                best_phi = j * dphi;
            }
        }
    }

    const SimplexResult refined = simplex_minimize(
        [&](const std::vector<double> &x) { return pe_at(x[0], x[1]); },
        {best_theta, best_phi}, 0.5 * dtheta, cfg.refine_iters);
    if (refined.value < best_pe) {
        best_pe = refined.value;
        best_theta = refined.x[0];
        best_phi = refined.x[1];
    }
    return {best_pe, canonical_angles(best_theta, best_phi)};
}

double oracle_assisted(const DiscriminationProblem &problem, const SearchConfig &cfg) {
    validate(cfg);
    const int d = problem.dim();
    if (d > 5) {
        throw std::invalid_argument("oracle_assisted: bipartite search is limited to d <= 5");
    }
    const int big = d * d;

    const auto pe_of_embedding = [&](const std::vector<double> &x) {
        std::vector<cxd> amps(static_cast<size_t>(big));
        double n2 = 0.0;
        for (int i = 0; i < big; ++i) {
            amps[static_cast<size_t>(i)] = cxd(x[static_cast<size_t>(2 * i)], x[static_cast<size_t>(2 * i + 1)]);
            n2 += std::norm(amps[static_cast<size_t>(i)]);
        }
        if (n2 < 1e-12) {
            return 1.0; // degenerate direction; worst possible value
        }
        const double inv = 1.0 / std::sqrt(n2);
        for (auto &z : amps) {
            z *= inv;
        }
        return output_error(problem, outer(PureState(std::move(amps))), true);
    };

    Rng rng(cfg.seed);
    double best_pe = 1.0;
    std::vector<double> best_x(static_cast<size_t>(2 * big), 0.0);
    for (int t = 0; t < cfg.restarts; ++t) {
        const PureState psi = random_pure_state(big, rng);
        std::vector<double> x(static_cast<size_t>(2 * big));
        for (int i = 0; i < big; ++i) {
            x[static_cast<size_t>(2 * i)] = psi.amp(i).real();
            x[static_cast<size_t>(2 * i + 1)] = psi.amp(i).imag();
        }
        const double pe = pe_of_embedding(x);
        if (pe < best_pe) {
            best_pe = pe;
            best_x = std::move(x);
        }
    }

    // Several simplex rounds from the running best; a fresh simplex recovers
    // from premature collapse.
    double step = 0.2;
    for (int round = 0; round < 3; ++round) {
        const SimplexResult res =
            simplex_minimize(pe_of_embedding, best_x, step, cfg.refine_iters);
        if (res.value < best_pe) {
            best_pe = res.value;
            best_x = res.x;
        }
        step *= 0.1;
    }
    return best_pe;
}

double oracle_state_discrimination(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                   const PriorPair &priors, const SearchConfig &cfg) {
    validate(cfg);
    if (rho1.dim() != rho2.dim()) {
        throw std::invalid_argument("oracle_state_discrimination: dimension mismatch");
    }
    const int n = rho1.dim();
    const ComplexMatrix eye = ComplexMatrix::identity(n);

    const auto pe_of_basis = [&](const ComplexMatrix &u) {
        // Best projective split of the basis columns into P1 / P2.
        double best = 1.0;
        ComplexMatrix p1(n);
        for (int k = 0; k < n - 1; ++k) {
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    p1(r, c) += u(r, k) * std::conj(u(c, k));
                }
            }
            ComplexMatrix p2 = eye;
            p2 -= p1;
            const TwoOutcomePovm povm{HermitianMatrix(p1), HermitianMatrix(p2)};
            best = std::min(best, error_probability(povm, rho1, rho2, priors));
        }
        return best;
    };

    // Trivial guesses first: always-1 errs with p2, always-2 with p1.
    double best_pe = std::min(priors.p1(), priors.p2());

    Rng rng(cfg.seed);
    ComplexMatrix best_u = eye;
    for (int t = 0; t < cfg.restarts; ++t) {
        const ComplexMatrix u = random_unitary(n, rng);
        const double pe = pe_of_basis(u);
        if (pe < best_pe) {
            best_pe = pe;
            best_u = u;
        }
    }

    // Refine the best basis: U(x) = exp(i G(x)) U_best with G Hermitian
    // parametrized by n^2 reals.
    const auto basis_of = [&](const std::vector<double> &x) {
        ComplexMatrix g(n);
        size_t k = 0;
        for (int r = 0; r < n; ++r) {
            g(r, r) = x[k++];
        }
        for (int r = 0; r < n; ++r) {
            for (int c = r + 1; c < n; ++c) {
                const cxd z(x[k], x[k + 1]);
                k += 2;
                g(r, c) = z;
                g(c, r) = std::conj(z);
            }
        }
        const EigResult e = hermitian_eig(HermitianMatrix(g));
        ComplexMatrix expg(n);
        for (int m = 0; m < n; ++m) {
            const cxd ph = std::polar(1.0, e.eigenvalues[static_cast<size_t>(m)]);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    expg(r, c) += ph * e.eigenvectors(r, m) * std::conj(e.eigenvectors(c, m));
                }
            }
        }
        return expg * best_u;
    };

    const SimplexResult res = simplex_minimize(
        [&](const std::vector<double> &x) { return pe_of_basis(basis_of(x)); },
        std::vector<double>(static_cast<size_t>(n) * n, 0.0), 0.1, cfg.refine_iters);
    return std::min(best_pe, res.value);
}

} // namespace pdisc
