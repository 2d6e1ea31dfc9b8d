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

#ifndef QVETO_QCORE_TYPES_HPP
#define QVETO_QCORE_TYPES_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "qveto/qcore/errors.hpp"

namespace qveto::qcore {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Ordered list of qubit indices a gate or channel acts on.
using QubitList = std::vector<int>;

inline constexpr int kMaxQubits = 8;

/// Absolute tolerance for invariant checks. 1e-9 for double; widened for
/// narrower scalars so that their rounding does not trip validation.
template <typename Real>
constexpr Real invariant_tolerance() {
  return std::max<Real>(Real(1e-9), Real(1000) * std::numeric_limits<Real>::epsilon());
}

/// Qubit j is bit (n - 1 - j) of the basis index, so labels read left to
/// right as |q0 q1 ... q(n-1)>.
inline constexpr int bit_position(int qubit, int n_qubits) { return n_qubits - 1 - qubit; }

inline std::uint64_t index_of(std::string_view label) {
  std::uint64_t index = 0;
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw InputError("basis label must contain only '0' and '1': " + std::string(label));
    }
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return index;
}

inline std::string label_of(std::uint64_t index, int n_qubits) {
  std::string label(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if ((index >> bit_position(q, n_qubits)) & 1U) label[static_cast<std::size_t>(q)] = '1';
  }
  return label;
}

inline int qubits_for_dimension(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || n < 1 || n > kMaxQubits) {
    throw InputError("dimension " + std::to_string(dim) + " is not 2^n for n in 1..8");
  }
  return n;
}

namespace detail {

inline void check_targets(const QubitList& targets, int n_qubits, std::size_t expected_count) {
  if (targets.size() != expected_count) {
    throw InputError("expected " + std::to_string(expected_count) + " target qubit(s), got " +
                     std::to_string(targets.size()));
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits) {
      throw InputError("target qubit " + std::to_string(targets[i]) + " out of range for " +
                       std::to_string(n_qubits) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw InputError("duplicate target qubit " + std::to_string(targets[i]));
      }
    }
  }
}

/// Left-multiplies every column of `m` by `op` embedded on `targets`. The
/// first target is the most significant qubit of `op`'s local index. `op`
/// need not be unitary, so the same kernel serves gates and Kraus operators.
template <typename Real>
void apply_local(CMatrix<Real>& m, const CMatrix<Real>& op, const QubitList& targets, int n_qubits) {
  const int k = static_cast<int>(targets.size());
  const Eigen::Index local_dim = Eigen::Index{1} << k;
  std::uint64_t target_mask = 0;
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(local_dim), 0);
  for (int j = 0; j < k; ++j) {
    target_mask |= std::uint64_t{1} << bit_position(targets[static_cast<std::size_t>(j)], n_qubits);
  }
  for (Eigen::Index l = 0; l < local_dim; ++l) {
    std::uint64_t offset = 0;
    for (int j = 0; j < k; ++j) {
      if ((static_cast<std::uint64_t>(l) >> (k - 1 - j)) & 1U) {
        offset |= std::uint64_t{1} << bit_position(targets[static_cast<std::size_t>(j)], n_qubits);
      }
    }
    offsets[static_cast<std::size_t>(l)] = offset;
  }

  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  CVector<Real> gathered(local_dim);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      for (Eigen::Index l = 0; l < local_dim; ++l) {
        gathered(l) = m(static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(l)]), col);
      }
      for (Eigen::Index r = 0; r < local_dim; ++r) {
        Complex<Real> acc(0, 0);
        for (Eigen::Index l = 0; l < local_dim; ++l) acc += op(r, l) * gathered(l);
        m(static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(r)]), col) = acc;
      }
    }
  }
}

/// op_embedded * rho * op_embedded^dagger.
template <typename Real>
CMatrix<Real> conjugate_local(const CMatrix<Real>& rho, const CMatrix<Real>& op, const QubitList& targets,
                              int n_qubits) {
  CMatrix<Real> left = rho;
  apply_local(left, op, targets, n_qubits);
  CMatrix<Real> right = left.adjoint();
  apply_local(right, op, targets, n_qubits);
  return right.adjoint();
}

}  // namespace detail
}  // namespace qveto::qcore

#endif  // QVETO_QCORE_TYPES_HPP
