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

#ifndef QVETO_QCORE_FIDELITY_HPP
#define QVETO_QCORE_FIDELITY_HPP

#include <cmath>
#include <string>

#include "qveto/qcore/state.hpp"

namespace qveto::qcore {

namespace detail {

template <typename Real>
constexpr Real clamp_slack() {
  return invariant_tolerance<Real>();
}

template <typename Real>
constexpr Real reject_below() {
  return std::max<Real>(Real(1e-6), Real(10) * invariant_tolerance<Real>());
}

/// Eigen-decomposes a Hermitian PSD matrix. Eigenvalues in [-1e-6, 0) are
/// clamped to 0; anything more negative is an invalid state.
template <typename Real>
Eigen::SelfAdjointEigenSolver<CMatrix<Real>> psd_eigen(const CMatrix<Real>& m, const char* what) {
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(m);
  if (solver.info() != Eigen::Success) throw InvalidStateError(std::string(what) + ": eigensolver failed");
  const Real smallest = solver.eigenvalues().minCoeff();
  if (smallest < -reject_below<Real>()) {
    throw InvalidStateError(std::string(what) + " has eigenvalue " + std::to_string(smallest));
  }
  return solver;
}

/// Eigenvalues below this are indistinguishable from zero after rounding.
template <typename Real, typename Derived>
Real rounding_floor(const Eigen::MatrixBase<Derived>& eigenvalues) {
  const Real scale = std::max<Real>(Real(1), eigenvalues.cwiseAbs().maxCoeff());
  return Real(4) * static_cast<Real>(eigenvalues.size()) * std::numeric_limits<Real>::epsilon() * scale;
}

/// Principal square root of a PSD matrix via its eigendecomposition.
template <typename Real>
CMatrix<Real> psd_sqrt(const CMatrix<Real>& m, const char* what) {
  const auto solver = psd_eigen<Real>(m, what);
  const Real floor = rounding_floor<Real>(solver.eigenvalues());
  const auto roots = solver.eigenvalues().unaryExpr([floor](Real v) { return v > floor ? std::sqrt(v) : Real(0); });
  return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace detail

/// Uhlmann fidelity F = (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2, clamped to
/// [0, 1]. Eigenvalues of the inner product at rounding level are treated as
/// exact zeros so rank-deficient inputs do not leak sqrt(eps) into the trace.
template <typename Real>
Real fidelity(const BasicDensityMatrix<Real>& sigma, const BasicDensityMatrix<Real>& rho) {
  if (sigma.dim() != rho.dim()) throw InputError("fidelity: dimension mismatch");
  detail::psd_eigen<Real>(rho.entries(), "rho");
  const CMatrix<Real> root_sigma = detail::psd_sqrt<Real>(sigma.entries(), "sigma");
  CMatrix<Real> inner = root_sigma * rho.entries() * root_sigma;
  inner = (inner + inner.adjoint()).eval() / Real(2);

  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(inner, Eigen::EigenvaluesOnly);
  const auto& lambda = solver.eigenvalues();
  const Real noise_floor = detail::rounding_floor<Real>(lambda);
  Real trace = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > noise_floor) trace += std::sqrt(lambda(i));
  }
  return std::clamp(trace * trace, Real(0), Real(1));
}

/// <psi|rho|psi>; equals fidelity(|psi><psi|, rho) without a matrix root.
template <typename Real>
Real pure_state_fidelity(const BasicStateVector<Real>& psi, const BasicDensityMatrix<Real>& rho) {
  if (psi.dim() != rho.dim()) throw InputError("fidelity: dimension mismatch");
  const Complex<Real> value = psi.amplitudes().dot(rho.entries() * psi.amplitudes());
  return std::clamp(value.real(), Real(0), Real(1));
}

}  // namespace qveto::qcore

#endif  // QVETO_QCORE_FIDELITY_HPP
