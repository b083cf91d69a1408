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

#include "pdisc/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pdisc {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 1) {
        throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
    }
    a_.assign(static_cast<size_t>(dim) * dim, cxd(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<cxd> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (dim < 1) {
        throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
    }
    if (a_.size() != static_cast<size_t>(dim) * dim) {
        throw std::invalid_argument("ComplexMatrix: entries must have dim^2 elements");
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cxd ComplexMatrix::trace() const {
    cxd t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto &z : a_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double ComplexMatrix::asymmetry() const {
    double m = 0.0;
    for (int r = 0; r < dim_; ++r) {
        for (int c = r; c < dim_; ++c) {
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return m;
}

bool ComplexMatrix::is_unitary(double tol) const {
    ComplexMatrix p = (*this) * adjoint();
    p -= identity(dim_);
    return p.max_abs() <= tol;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("matrix addition: dimension mismatch");
    }
    for (size_t i = 0; i < a_.size(); ++i) {
        a_[i] += rhs.a_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("matrix subtraction: dimension mismatch");
    }
    for (size_t i = 0; i < a_.size(); ++i) {
        a_[i] -= rhs.a_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cxd s) {
    for (auto &z : a_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r) {
        for (int k = 0; k < dim_; ++k) {
            const cxd lrk = (*this)(r, k);
            if (lrk == cxd(0.0, 0.0)) {
                continue;
            }
            for (int c = 0; c < dim_; ++c) {
                out(r, c) += lrk * rhs(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    const int da = a.dim();
    const int db = b.dim();
    ComplexMatrix out(da * db);
    for (int ra = 0; ra < da; ++ra) {
        for (int ca = 0; ca < da; ++ca) {
            const cxd f = a(ra, ca);
            if (f == cxd(0.0, 0.0)) {
                continue;
            }
            for (int rb = 0; rb < db; ++rb) {
                for (int cb = 0; cb < db; ++cb) {
                    out(ra * db + rb, ca * db + cb) = f * b(rb, cb);
                }
            }
        }
    }
    return out;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix &m, double tol) : m_(m.dim()) {
    if (m.asymmetry() > tol) {
        throw std::invalid_argument("HermitianMatrix: input is not Hermitian (asymmetry " +
                                    std::to_string(m.asymmetry()) + ")");
    }
    const int n = m.dim();
    for (int r = 0; r < n; ++r) {
        m_(r, r) = cxd(m(r, r).real(), 0.0);
        for (int c = r + 1; c < n; ++c) {
            const cxd v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            m_(r, c) = v;
            m_(c, r) = std::conj(v);
        }
    }
}

PureState::PureState(std::vector<cxd> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw std::invalid_argument("PureState: empty amplitude vector");
    }
    double n2 = 0.0;
    for (const auto &z : amps_) {
        n2 += std::norm(z);
    }
    if (std::abs(n2 - 1.0) > 1e-12) {
        throw std::invalid_argument("PureState: squared norm differs from 1 by " +
                                    std::to_string(std::abs(n2 - 1.0)));
    }
}

namespace {

void check_density(const HermitianMatrix &h) {
    if (std::abs(h.mat().trace().real() - 1.0) > 1e-10) {
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    }
    const EigResult e = hermitian_eig(h);
    if (e.eigenvalues.back() < -1e-10) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(e.eigenvalues.back()));
    }
}

} // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix &m) : HermitianMatrix(m) {
    check_density(*this);
}

DensityMatrix::DensityMatrix(const HermitianMatrix &h) : HermitianMatrix(h) {
    check_density(*this);
}

namespace {

double offdiag_frobenius(const ComplexMatrix &a) {
    double s = 0.0;
    const int n = a.dim();
    for (int r = 0; r < n; ++r) {
        for (int c = r + 1; c < n; ++c) {
            s += 2.0 * std::norm(a(r, c));
        }
    }
    return std::sqrt(s);
}

} // namespace

EigResult hermitian_eig(const HermitianMatrix &h) {
    const int n = h.dim();
    ComplexMatrix a = h.mat();
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_frobenius(a) < 1e-14) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cxd apq = a(p, q);
                const double absb = std::abs(apq);
                if (absb == 0.0) {
                    continue;
                }
                // Phase rotation turns the (p,q) block real symmetric, then a
                // classic Jacobi rotation zeroes the off-diagonal element.
                const cxd phase = apq / absb; // e^{i beta}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * absb);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Unitary on the (p,q) plane:
                //   U(p,p) = c            U(p,q) = s
                //   U(q,p) = -s e^{-ib}   U(q,q) = c e^{-ib}
                const cxd uqp = -s * std::conj(phase);
                const cxd uqq = c * std::conj(phase);

                // A <- U^dag A U
                for (int i = 0; i < n; ++i) {
                    const cxd aip = a(i, p);
                    const cxd aiq = a(i, q);
                    a(i, p) = aip * c + aiq * uqp;
                    a(i, q) = aip * s + aiq * uqq;
                }
                for (int j = 0; j < n; ++j) {
                    const cxd apj = a(p, j);
                    const cxd aqj = a(q, j);
                    a(p, j) = c * apj + std::conj(uqp) * aqj;
                    a(q, j) = s * apj + std::conj(uqq) * aqj;
                }
                a(p, q) = cxd(0.0, 0.0);
                a(q, p) = cxd(0.0, 0.0);
                a(p, p) = cxd(a(p, p).real(), 0.0);
                a(q, q) = cxd(a(q, q).real(), 0.0);

                for (int i = 0; i < n; ++i) {
                    const cxd vip = v(i, p);
                    const cxd viq = v(i, q);
                    v(i, p) = vip * c + viq * uqp;
                    v(i, q) = vip * s + viq * uqq;
                }
            }
        }
    }
    if (!converged && offdiag_frobenius(a) >= 1e-14) {
        throw std::runtime_error("hermitian_eig: Jacobi sweeps did not converge");
    }

    // Fix each eigenvector's global phase: largest component real positive.
    for (int c = 0; c < n; ++c) {
        int imax = 0;
        double best = 0.0;
        for (int i = 0; i < n; ++i) {
            const double m = std::abs(v(i, c));
            if (m > best) {
                best = m;
                imax = i;
            }
        }
        if (best > 0.0) {
            const cxd ph = std::conj(v(imax, c)) / std::abs(v(imax, c));
            for (int i = 0; i < n; ++i) {
                v(i, c) *= ph;
            }
        }
    }

    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        const double lx = a(x, x).real();
        const double ly = a(y, y).real();
        if (lx != ly) {
            return lx > ly;
        }
        for (int i = 0; i < n; ++i) {
            const cxd zx = v(i, x);
            const cxd zy = v(i, y);
            if (zx.real() != zy.real()) {
                return zx.real() < zy.real();
            }
            if (zx.imag() != zy.imag()) {
                return zx.imag() < zy.imag();
            }
        }
        return false;
    });

    EigResult out{std::vector<double>(static_cast<size_t>(n)), ComplexMatrix(n)};
    for (int c = 0; c < n; ++c) {
        out.eigenvalues[static_cast<size_t>(c)] = a(idx[static_cast<size_t>(c)], idx[static_cast<size_t>(c)]).real();
        for (int i = 0; i < n; ++i) {
            out.eigenvectors(i, c) = v(i, idx[static_cast<size_t>(c)]);
        }
    }
    return out;
}

double trace_norm(const HermitianMatrix &h) {
    const EigResult e = hermitian_eig(h);
    double s = 0.0;
    for (const double lam : e.eigenvalues) {
        s += std::abs(lam);
    }
    return s;
}

DensityMatrix outer(const PureState &v) {
    const int n = v.dim();
    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            m(r, c) = v.amp(r) * std::conj(v.amp(c));
        }
    }
    return DensityMatrix(m);
}

} // namespace pdisc
