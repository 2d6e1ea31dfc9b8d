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

#ifndef QVETO_QCORE_GATE_HPP
#define QVETO_QCORE_GATE_HPP

#include <cmath>
#include <string>
#include <utility>

#include "qveto/qcore/state.hpp"

namespace qveto::qcore {

/// Unitary acting on one or two qubits.
template <typename Real>
class BasicGateMatrix {
 public:
  using RealScalar = Real;
  using Scalar = Complex<Real>;
  using Matrix = CMatrix<Real>;

  static BasicGateMatrix from_matrix(Matrix matrix, std::string name = "U") {
    if (matrix.rows() != matrix.cols() || (matrix.rows() != 2 && matrix.rows() != 4)) {
      throw InputError("gate matrix must be 2x2 or 4x4");
    }
    if (!detail::all_finite(matrix)) throw InputError("gate matrix has non-finite entry");
    const Matrix defect = matrix.adjoint() * matrix - Matrix::Identity(matrix.rows(), matrix.cols());
    if (defect.cwiseAbs().maxCoeff() > invariant_tolerance<Real>()) {
      throw InputError("gate matrix '" + name + "' is not unitary");
    }
    const int arity = matrix.rows() == 2 ? 1 : 2;
    return BasicGateMatrix(arity, std::move(matrix), std::move(name));
  }

  int arity() const { return arity_; }
  const Matrix& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }

  BasicGateMatrix adjoint() const { return BasicGateMatrix(arity_, matrix_.adjoint(), name_ + "^dag"); }

 private:
  BasicGateMatrix(int arity, Matrix matrix, std::string name)
      : arity_(arity), matrix_(std::move(matrix)), name_(std::move(name)) {}

  int arity_;
  Matrix matrix_;
  std::string name_;
};

using GateMatrix = BasicGateMatrix<double>;

/// Tensor product a (x) b; `a` acts on the first target.
template <typename Real>
BasicGateMatrix<Real> kron(const BasicGateMatrix<Real>& a, const BasicGateMatrix<Real>& b) {
  if (a.arity() != 1 || b.arity() != 1) throw InputError("kron is defined for single-qubit gates");
  CMatrix<Real> m(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m.block(2 * i, 2 * j, 2, 2) = a.matrix()(i, j) * b.matrix();
  }
  return BasicGateMatrix<Real>::from_matrix(std::move(m), a.name() + "(x)" + b.name());
}

namespace gates {

template <typename Real = double>
BasicGateMatrix<Real> from_rows(std::initializer_list<std::initializer_list<Complex<Real>>> rows,
                                std::string name) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  CMatrix<Real> m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return BasicGateMatrix<Real>::from_matrix(std::move(m), std::move(name));
}

template <typename Real = double>
BasicGateMatrix<Real> identity() {
  return from_rows<Real>({{1, 0}, {0, 1}}, "I");
}

template <typename Real = double>
BasicGateMatrix<Real> x() {
  return from_rows<Real>({{0, 1}, {1, 0}}, "X");
}

template <typename Real = double>
BasicGateMatrix<Real> y() {
  const Complex<Real> i(0, 1);
  return from_rows<Real>({{0, -i}, {i, 0}}, "Y");
}

/// i*Y as the real matrix [[0, 1], [-1, 0]].
template <typename Real = double>
BasicGateMatrix<Real> iy() {
  return from_rows<Real>({{0, 1}, {-1, 0}}, "iY");
}

template <typename Real = double>
BasicGateMatrix<Real> z() {
  return from_rows<Real>({{1, 0}, {0, -1}}, "Z");
}

template <typename Real = double>
BasicGateMatrix<Real> h() {
  const Real s = Real(1) / std::sqrt(Real(2));
  return from_rows<Real>({{s, s}, {s, -s}}, "H");
}

/// diag(1, e^{i theta}).
template <typename Real = double>
BasicGateMatrix<Real> phase(Real theta, std::string name = "P") {
  return from_rows<Real>({{1, 0}, {0, std::polar(Real(1), theta)}}, std::move(name));
}

/// Control is the first target.
template <typename Real = double>
BasicGateMatrix<Real> cnot() {
  return from_rows<Real>({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}, "CNOT");
}

template <typename Real = double>
BasicGateMatrix<Real> cz() {
  return from_rows<Real>({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}, "CZ");
}

}  // namespace gates

/// U|psi> with U embedded on `targets`.
template <typename Real>
BasicStateVector<Real> apply_gate(const BasicStateVector<Real>& state, const BasicGateMatrix<Real>& gate,
                                  const QubitList& targets) {
  detail::check_targets(targets, state.n_qubits(), static_cast<std::size_t>(gate.arity()));
  CMatrix<Real> column = state.amplitudes();
  detail::apply_local(column, gate.matrix(), targets, state.n_qubits());
  return detail::TrustedAccess::state<Real>(state.n_qubits(), CVector<Real>(column.col(0)));
}

/// U rho U^dagger with U embedded on `targets`.
template <typename Real>
BasicDensityMatrix<Real> apply_gate_dm(const BasicDensityMatrix<Real>& rho, const BasicGateMatrix<Real>& gate,
                                       const QubitList& targets) {
  detail::check_targets(targets, rho.n_qubits(), static_cast<std::size_t>(gate.arity()));
  return detail::TrustedAccess::density<Real>(
      rho.n_qubits(), detail::conjugate_local(rho.entries(), gate.matrix(), targets, rho.n_qubits()));
}

}  // namespace qveto::qcore

#endif  // QVETO_QCORE_GATE_HPP
