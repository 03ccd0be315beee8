/* Copyright 2026 The Qtrack Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "qtrack/propagator.hpp"

#include <cmath>
#include <vector>

#include "qtrack/errors.hpp"

namespace qtrack {

namespace {
using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

// exp(-i dt T) e1 for the real symmetric tridiagonal T spanned by the Lanczos
// coefficients, via its eigendecomposition. Exactly unitary up to roundoff.
Eigen::VectorXcd tridiagonal_exp_e1(const std::vector<double>& alpha,
                                    const std::vector<double>& beta, int m, double dt) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    t(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < m) {
      t(i, i + 1) = beta[static_cast<std::size_t>(i)];
      t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  const Eigen::MatrixXd& q = eig.eigenvectors();

  Eigen::VectorXcd phases(m);
  for (int i = 0; i < m; ++i) phases[i] = std::exp(-kI * (dt * ev[i]));
  return q * (phases.asDiagonal() * q.row(0).transpose().cast<Complex>());
}

}  // namespace

void HamiltonianOperator::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  out = ops->h0.asDiagonal() * in;
  if (fields.eps_x != 0.0) out.noalias() -= (mu * fields.eps_x) * (ops->x.entries * in);
  if (fields.eps_y != 0.0) out.noalias() -= (mu * fields.eps_y) * (ops->y.entries * in);
  if (fields.eps_z != 0.0) out.noalias() -= (mu * fields.eps_z) * (ops->z.entries * in);
}

Eigen::MatrixXcd HamiltonianOperator::dense() const {
  const Eigen::Index n = ops->basis.dim();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  h.diagonal() = ops->h0.cast<Complex>();
  h -= (mu * fields.eps_x) * Eigen::MatrixXcd(ops->x.entries);
  h -= (mu * fields.eps_y) * Eigen::MatrixXcd(ops->y.entries);
  h -= (mu * fields.eps_z) * Eigen::MatrixXcd(ops->z.entries);
  return h;
}

HamiltonianOperator assemble_hamiltonian(const RotorSpec& rotor, const OperatorSet& ops,
                                         const FieldSample& fields) {
  if (rotor.jmax != ops.basis.jmax() || rotor.kind != ops.kind) {
    throw ContractViolation("assemble_hamiltonian: rotor spec and operator set disagree");
  }
  return HamiltonianOperator{&ops, rotor.mu, fields};
}

WaveFunction step(const WaveFunction& psi, const HamiltonianOperator& h, double dt,
                  double tol, int max_krylov) {
  if (!(dt > 0.0)) throw DomainError("step: dt must be positive");
  if (psi.basis != key_of(h.ops->basis)) {
    throw ContractViolation("step: wave function built on a different basis");
  }

  const Eigen::Index n = psi.amplitudes.size();
  const int cap = std::min<int>(max_krylov, static_cast<int>(n));

  std::vector<Eigen::VectorXcd> v;
  v.reserve(static_cast<std::size_t>(cap) + 1);
  std::vector<double> alpha, beta;

  const double psi_norm = psi.amplitudes.norm();
  v.push_back(psi.amplitudes / psi_norm);

  Eigen::VectorXcd w(n);
  Eigen::VectorXcd y;
  double residual = std::numeric_limits<double>::infinity();
  int converged_streak = 0;
  int m = 0;

  while (m < cap) {
    h.apply(v[static_cast<std::size_t>(m)], w);
    const double a = v[static_cast<std::size_t>(m)].dot(w).real();
    alpha.push_back(a);
    w -= a * v[static_cast<std::size_t>(m)];
    if (m > 0) w -= beta[static_cast<std::size_t>(m - 1)] * v[static_cast<std::size_t>(m - 1)];
    // Full reorthogonalization; the subspace stays small so this is cheap.
    for (int i = 0; i <= m; ++i) {
      w -= v[static_cast<std::size_t>(i)].dot(w) * v[static_cast<std::size_t>(i)];
    }
    const double b = w.norm();
    ++m;

    y = tridiagonal_exp_e1(alpha, beta, m, dt);

    if (b < 1e-14) {
      // Invariant subspace reached; the Krylov result is exact.
      residual = 0.0;
      break;
    }
    residual = b * std::abs(y[m - 1]);
    if (residual < tol) {
      if (++converged_streak >= 2) break;
    } else {
      converged_streak = 0;
    }
    beta.push_back(b);
    v.push_back(w / b);
  }

  if (residual >= tol && residual != 0.0) {
    throw PropagationError(residual, tol);
  }

  WaveFunction out;
  out.basis = psi.basis;
  out.amplitudes = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < m; ++i) {
    out.amplitudes.noalias() += (psi_norm * y[i]) * v[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace qtrack
