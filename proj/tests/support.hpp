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


#ifndef QVETO_TESTS_SUPPORT_HPP
#define QVETO_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>

#include "qveto/qcore.hpp"

namespace qveto::test_support {

/// Haar-ish random pure state from normalized complex Gaussian amplitudes.
inline qcore::StateVector random_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  qcore::CVector<double> v(Eigen::Index{1} << n_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {normal(rng), normal(rng)};
  v.normalize();
  return qcore::StateVector::from_amplitudes(v);
}

/// Random mixed state G G^dagger / Tr, with G complex Gaussian.
inline qcore::DensityMatrix random_density(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  qcore::CMatrix<double> g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = {normal(rng), normal(rng)};
  }
  qcore::CMatrix<double> rho = g * g.adjoint();
  rho /= rho.trace().real();
  return qcore::DensityMatrix::from_matrix(rho);
}

/// Random unitary from the QR decomposition of a complex Gaussian matrix.
inline qcore::CMatrix<double> random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  qcore::CMatrix<double> g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = {normal(rng), normal(rng)};
  }
  Eigen::HouseholderQR<qcore::CMatrix<double>> qr(g);
  return qr.householderQ() * qcore::CMatrix<double>::Identity(dim, dim);
}

inline qcore::DensityMatrix conjugate(const qcore::DensityMatrix& rho, const qcore::CMatrix<double>& u) {
  return qcore::DensityMatrix::from_matrix(u * rho.entries() * u.adjoint());
}

}  // namespace qveto::test_support

#endif  // QVETO_TESTS_SUPPORT_HPP
