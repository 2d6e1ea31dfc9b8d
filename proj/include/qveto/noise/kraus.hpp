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

#ifndef QVETO_NOISE_KRAUS_HPP
#define QVETO_NOISE_KRAUS_HPP

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qveto/qcore/gate.hpp"

namespace qveto::noise {

enum class ChannelKind { amplitude_damping, phase_damping, depolarizing, bit_flip, custom };

std::string_view to_string(ChannelKind kind);

/// Accepts canonical names and the short forms amplitude, phase, depol, bitflip.
std::optional<ChannelKind> parse_channel_kind(std::string_view name);

/// Single-qubit CPTP map rho -> sum_k K rho K^dagger.
template <typename Real>
class BasicKrausChannel {
 public:
  using Matrix2 = qcore::CMatrix<Real>;

  /// Validates completeness sum_k K^dagger K = I.
  static BasicKrausChannel from_operators(std::vector<Matrix2> operators, ChannelKind kind = ChannelKind::custom,
                                          Real strength = Real(0)) {
    if (operators.empty()) throw InputError("Kraus channel needs at least one operator");
    if (!(strength >= Real(0) && strength <= Real(1))) throw InputError("channel strength outside [0, 1]");
    Matrix2 sum = Matrix2::Zero(2, 2);
    for (const auto& k : operators) {
      if (k.rows() != 2 || k.cols() != 2) throw InputError("Kraus operators must be 2x2");
      sum += k.adjoint() * k;
    }
    if ((sum - Matrix2::Identity(2, 2)).cwiseAbs().maxCoeff() > qcore::invariant_tolerance<Real>()) {
      throw InputError("Kraus operators are not complete (sum K^dag K != I)");
    }
    return BasicKrausChannel(std::move(operators), kind, strength);
  }

  static BasicKrausChannel identity() {
    return BasicKrausChannel({Matrix2::Identity(2, 2)}, ChannelKind::custom, Real(0));
  }

  int arity() const { return 1; }
  ChannelKind kind() const { return kind_; }
  Real strength() const { return strength_; }
  const std::vector<Matrix2>& operators() const { return operators_; }

  /// True when the operator set is exactly {I}.
  bool is_identity() const {
    return operators_.size() == 1 && operators_.front() == Matrix2::Identity(2, 2);
  }

 private:
  BasicKrausChannel(std::vector<Matrix2> operators, ChannelKind kind, Real strength)
      : operators_(std::move(operators)), kind_(kind), strength_(strength) {}

  std::vector<Matrix2> operators_;
  ChannelKind kind_;
  Real strength_;
};

using KrausChannel = BasicKrausChannel<double>;

namespace detail {

template <typename Real>
void check_strength(Real value, const char* name) {
  if (!(value >= Real(0) && value <= Real(1))) {
    throw InputError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

template <typename Real>
qcore::CMatrix<Real> mat2(qcore::Complex<Real> a, qcore::Complex<Real> b, qcore::Complex<Real> c,
                          qcore::Complex<Real> d) {
  qcore::CMatrix<Real> m(2, 2);
  m << a, b, c, d;
  return m;
}

/// Operators with zero weight are dropped so that strength 0 reduces to {I}.
template <typename Real>
BasicKrausChannel<Real> weighted(std::vector<std::pair<Real, qcore::CMatrix<Real>>> terms, ChannelKind kind,
                                 Real strength) {
  std::vector<qcore::CMatrix<Real>> ops;
  for (auto& [weight, op] : terms) {
    if (weight == Real(0)) continue;
    ops.push_back(weight == Real(1) ? std::move(op) : qcore::CMatrix<Real>(weight * op));
  }
  return BasicKrausChannel<Real>::from_operators(std::move(ops), kind, strength);
}

}  // namespace detail

/// K0 = diag(1, sqrt(1 - gamma)), K1 = sqrt(gamma) |0><1|.
template <typename Real>
BasicKrausChannel<Real> amplitude_damping(Real gamma) {
  detail::check_strength(gamma, "gamma");
  const Real keep = std::sqrt(Real(1) - gamma);
  std::vector<qcore::CMatrix<Real>> ops{detail::mat2<Real>(1, 0, 0, keep)};
  if (gamma > Real(0)) ops.push_back(detail::mat2<Real>(0, std::sqrt(gamma), 0, 0));
  return BasicKrausChannel<Real>::from_operators(std::move(ops), ChannelKind::amplitude_damping, gamma);
}

/// K0 = diag(1, sqrt(1 - lambda)), K1 = diag(0, sqrt(lambda)).
template <typename Real>
BasicKrausChannel<Real> phase_damping(Real lambda) {
  detail::check_strength(lambda, "lambda");
  const Real keep = std::sqrt(Real(1) - lambda);
  std::vector<qcore::CMatrix<Real>> ops{detail::mat2<Real>(1, 0, 0, keep)};
  if (lambda > Real(0)) ops.push_back(detail::mat2<Real>(0, 0, 0, std::sqrt(lambda)));
  return BasicKrausChannel<Real>::from_operators(std::move(ops), ChannelKind::phase_damping, lambda);
}

/// rho -> (1 - p) rho + p I/2, as weights sqrt(1 - 3p/4) on I and sqrt(p/4)
/// on each of X, Y, Z.
template <typename Real>
BasicKrausChannel<Real> depolarizing(Real p) {
  detail::check_strength(p, "p");
  const qcore::Complex<Real> i(0, 1);
  const Real w0 = std::sqrt(Real(1) - Real(3) * p / Real(4));
  const Real w = std::sqrt(p / Real(4));
  return detail::weighted<Real>({{w0, detail::mat2<Real>(1, 0, 0, 1)},
                                 {w, detail::mat2<Real>(0, 1, 1, 0)},
                                 {w, detail::mat2<Real>(0, -i, i, 0)},
                                 {w, detail::mat2<Real>(1, 0, 0, -1)}},
                                ChannelKind::depolarizing, p);
}

/// sqrt(1 - p) I, sqrt(p) X.
template <typename Real>
BasicKrausChannel<Real> bit_flip(Real p) {
  detail::check_strength(p, "p");
  return detail::weighted<Real>({{std::sqrt(Real(1) - p), detail::mat2<Real>(1, 0, 0, 1)},
                                 {std::sqrt(p), detail::mat2<Real>(0, 1, 1, 0)}},
                                ChannelKind::bit_flip, p);
}

template <typename Real>
BasicKrausChannel<Real> make_channel(ChannelKind kind, Real strength) {
  switch (kind) {
    case ChannelKind::amplitude_damping:
      return amplitude_damping(strength);
    case ChannelKind::phase_damping:
      return phase_damping(strength);
    case ChannelKind::depolarizing:
      return depolarizing(strength);
    case ChannelKind::bit_flip:
      return bit_flip(strength);
    case ChannelKind::custom:
      break;
  }
  throw InputError("custom channels have no strength constructor");
}

template <typename Real>
qcore::BasicDensityMatrix<Real> apply_channel(const qcore::BasicDensityMatrix<Real>& rho,
                                              const BasicKrausChannel<Real>& channel, int target) {
  const qcore::QubitList targets{target};
  qcore::detail::check_targets(targets, rho.n_qubits(), 1);
  if (channel.is_identity()) return rho;
  qcore::CMatrix<Real> out = qcore::CMatrix<Real>::Zero(rho.dim(), rho.dim());
  for (const auto& k : channel.operators()) {
    out += qcore::detail::conjugate_local(rho.entries(), k, targets, rho.n_qubits());
  }
  return qcore::detail::TrustedAccess::density<Real>(rho.n_qubits(), std::move(out));
}

}  // namespace qveto::noise

#endif  // QVETO_NOISE_KRAUS_HPP
