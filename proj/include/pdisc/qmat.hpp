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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdisc {

using cxd = std::complex<double>;

/// Dense square complex matrix, row-major. The workhorse for operators,
/// states and POVM elements up to dim 256.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<cxd> entries);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    cxd &operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const cxd &operator()(int r, int c) const {
        return a_[static_cast<size_t>(r) * dim_ + c];
    }

    ComplexMatrix adjoint() const;
    cxd trace() const;
    /// Largest entry magnitude.
    double max_abs() const;
    /// max_jk |a(j,k) - conj(a(k,j))| -- distance from being Hermitian.
    double asymmetry() const;
    bool is_unitary(double tol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(cxd s);
    ComplexMatrix operator*(const ComplexMatrix &rhs) const;

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        lhs += rhs;
        return lhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend ComplexMatrix operator*(cxd s, ComplexMatrix m) {
        m *= s;
        return m;
    }
    friend ComplexMatrix operator*(double s, ComplexMatrix m) {
        m *= cxd(s, 0.0);
        return m;
    }

  private:
    int dim_;
    std::vector<cxd> a_;
};

/// Kronecker product, dim = dim(a) * dim(b).
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Hermitian matrix. The constructor symmetrizes via (H + H^dag)/2 when the
/// asymmetry is below tol and rejects larger drift.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(const ComplexMatrix &m, double tol = 1e-12);

    const ComplexMatrix &mat() const { return m_; }
    int dim() const { return m_.dim(); }
    const cxd &operator()(int r, int c) const { return m_(r, c); }

  private:
    ComplexMatrix m_;
};

/// Normalized state vector (squared norm 1 within 1e-12).
class PureState {
  public:
    explicit PureState(std::vector<cxd> amplitudes);

    int dim() const { return static_cast<int>(amps_.size()); }
    const cxd &amp(int i) const { return amps_[static_cast<size_t>(i)]; }
    const std::vector<cxd> &amps() const { return amps_; }

  private:
    std::vector<cxd> amps_;
};

/// Hermitian, unit trace (within 1e-10), eigenvalues >= -1e-10.
class DensityMatrix : public HermitianMatrix {
  public:
    explicit DensityMatrix(const ComplexMatrix &m);
    explicit DensityMatrix(const HermitianMatrix &h);
};

struct EigResult {
    std::vector<double> eigenvalues; // descending
    ComplexMatrix eigenvectors;      // column i pairs with eigenvalues[i]
};

/// Full eigendecomposition by cyclic Jacobi rotations. Eigenvalues are sorted
/// descending, ties broken by the first differing eigenvector component, and
/// each eigenvector's largest component is made real positive so outputs are
/// deterministic.
EigResult hermitian_eig(const HermitianMatrix &h);

/// Sum of absolute eigenvalues (= sum of singular values for Hermitian input).
double trace_norm(const HermitianMatrix &h);

/// Rank-1 projector |v><v|.
DensityMatrix outer(const PureState &v);

} // namespace pdisc
