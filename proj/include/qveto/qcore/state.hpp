// Copyright 2026 The qveto Authors
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

#ifndef QVETO_QCORE_STATE_HPP
#define QVETO_QCORE_STATE_HPP

#include <cmath>
#include <string>
#include <utility>

#include "qveto/qcore/types.hpp"

namespace qveto::qcore {

template <typename Real>
class BasicStateVector;
template <typename Real>
class BasicDensityMatrix;

namespace detail {
// Construction path for results of operations that preserve the invariants
// by construction (unitary evolution, CPTP maps).
struct TrustedAccess {
  template <typename Real>
  static BasicStateVector<Real> state(int n_qubits, CVector<Real> amplitudes) {
    return BasicStateVector<Real>(n_qubits, std::move(amplitudes));
  }
  template <typename Real>
  static BasicDensityMatrix<Real> density(int n_qubits, CMatrix<Real> entries) {
    return BasicDensityMatrix<Real>(n_qubits, std::move(entries));
  }
};

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}
}  // namespace detail

/// Normalized pure state over 1..8 qubits.
template <typename Real>
class BasicStateVector {
 public:
  using RealScalar = Real;
  using Scalar = Complex<Real>;
  using Vector = CVector<Real>;

  /// Validates finiteness, power-of-two length and unit norm.
  static BasicStateVector from_amplitudes(Vector amplitudes) {
    const int n = qubits_for_dimension(amplitudes.size());
    if (!detail::all_finite(amplitudes)) throw InvalidStateError("state has non-finite amplitude");
    const Real norm2 = amplitudes.squaredNorm();
    if (std::abs(norm2 - Real(1)) > invariant_tolerance<Real>()) {
      throw InvalidStateError("state norm^2 = " + std::to_string(norm2) + ", expected 1");
    }
    return BasicStateVector(n, std::move(amplitudes));
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Scalar operator[](Eigen::Index index) const { return amplitudes_(index); }

  Scalar amplitude(std::string_view label) const {
    if (static_cast<int>(label.size()) != n_qubits_) throw InputError("label width mismatch");
    return amplitudes_(static_cast<Eigen::Index>(index_of(label)));
  }

  friend bool operator==(const BasicStateVector& a, const BasicStateVector& b) {
    return a.n_qubits_ == b.n_qubits_ && a.amplitudes_ == b.amplitudes_;
  }

 private:
  friend struct detail::TrustedAccess;
  BasicStateVector(int n_qubits, Vector amplitudes) : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

  int n_qubits_;
  Vector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite operator over 1..8 qubits.
template <typename Real>
class BasicDensityMatrix {
 public:
  using RealScalar = Real;
  using Scalar = Complex<Real>;
  using Matrix = CMatrix<Real>;

  /// Validates Hermiticity, unit trace, and eigenvalues >= -tolerance.
  static BasicDensityMatrix from_matrix(Matrix entries) {
    if (entries.rows() != entries.cols()) throw InvalidStateError("density matrix must be square");
    const int n = qubits_for_dimension(entries.rows());
    if (!detail::all_finite(entries)) throw InvalidStateError("density matrix has non-finite entry");
    const Real tol = invariant_tolerance<Real>();
    if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > tol) {
      throw InvalidStateError("density matrix is not Hermitian");
    }
    const Scalar trace = entries.trace();
    if (std::abs(trace - Scalar(1, 0)) > tol) {
      throw InvalidStateError("density matrix trace = " + std::to_string(trace.real()) + ", expected 1");
    }
    const Matrix hermitian = (entries + entries.adjoint()) / Real(2);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol) {
      throw InvalidStateError("density matrix has negative eigenvalue " +
                              std::to_string(solver.eigenvalues().minCoeff()));
    }
    return BasicDensityMatrix(n, hermitian);
  }

  /// I / 2^n.
  static BasicDensityMatrix maximally_mixed(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) throw InputError("n_qubits out of range");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    return BasicDensityMatrix(n_qubits, Matrix::Identity(dim, dim) / Real(dim));
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  Scalar operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

  friend bool operator==(const BasicDensityMatrix& a, const BasicDensityMatrix& b) {
    return a.n_qubits_ == b.n_qubits_ && a.entries_ == b.entries_;
  }

 private:
  friend struct detail::TrustedAccess;
  BasicDensityMatrix(int n_qubits, Matrix entries) : n_qubits_(n_qubits), entries_(std::move(entries)) {}

  int n_qubits_;
  Matrix entries_;
};

using StateVector = BasicStateVector<double>;
using DensityMatrix = BasicDensityMatrix<double>;

template <typename Real = double>
BasicStateVector<Real> basis_state(int n_qubits, std::string_view label) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InputError("n_qubits must be in 1..8");
  if (static_cast<int>(label.size()) != n_qubits) {
    throw InputError("label '" + std::string(label) + "' does not have " + std::to_string(n_qubits) +
                     " symbols");
  }
  CVector<Real> amplitudes = CVector<Real>::Zero(Eigen::Index{1} << n_qubits);
  amplitudes(static_cast<Eigen::Index>(index_of(label))) = Complex<Real>(1, 0);
  return detail::TrustedAccess::state<Real>(n_qubits, std::move(amplitudes));
}

/// |psi><psi|.
template <typename Real>
BasicDensityMatrix<Real> to_density(const BasicStateVector<Real>& state) {
  CMatrix<Real> rho = state.amplitudes() * state.amplitudes().adjoint();
  return detail::TrustedAccess::density<Real>(state.n_qubits(), std::move(rho));
}

/// True when a = c * b for some |c| = 1, each amplitude within `tol`.
template <typename Real>
bool equal_up_to_global_phase(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b,
                              Real tol = invariant_tolerance<Real>()) {
  if (a.n_qubits() != b.n_qubits()) throw InputError("states differ in width");
  Eigen::Index pivot = 0;
  b.amplitudes().cwiseAbs().maxCoeff(&pivot);
  const Complex<Real> ratio = a[pivot] / b[pivot];
  if (std::abs(ratio) == Real(0)) return false;
  const Complex<Real> phase = ratio / std::abs(ratio);
  return (a.amplitudes() - phase * b.amplitudes()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qveto::qcore

#endif  // QVETO_QCORE_STATE_HPP
