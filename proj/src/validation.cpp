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

#include "qtrack/validation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qtrack/propagator.hpp"
#include "qtrack/qtc.hpp"
#include "qtrack/wigner.hpp"

namespace qtrack {

namespace {

using Complex = std::complex<double>;

// Portable standard normal: Box-Muller over the raw 64-bit stream.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  double uniform() {
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
  }
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

WaveFunction random_state_impl(const Basis& basis, std::uint64_t seed, bool interior_only) {
  NormalSource normal(seed);
  WaveFunction psi;
  psi.basis = key_of(basis);
  psi.amplitudes = Eigen::VectorXcd::Zero(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) {
    if (interior_only && basis.state(i).j >= basis.jmax()) continue;
    psi.amplitudes[i] = Complex(normal.next(), normal.next());
  }
  psi.amplitudes /= psi.amplitudes.norm();
  return psi;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

double hermiticity_defect(const OperatorMatrix& op) {
  const Eigen::SparseMatrix<Complex> diff =
      op.entries - Eigen::SparseMatrix<Complex>(op.entries.adjoint());
  double defect = 0.0;
  for (int outer = 0; outer < diff.outerSize(); ++outer) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(diff, outer); it; ++it) {
      defect = std::max(defect, std::abs(it.value()));
    }
  }
  return defect;
}

bool check_hermitian(const OperatorMatrix& op, double tol) {
  return hermiticity_defect(op) <= tol;
}

WaveFunction random_interior_state(const Basis& basis, std::uint64_t seed) {
  return random_state_impl(basis, seed, true);
}

WaveFunction random_state(const Basis& basis, std::uint64_t seed) {
  return random_state_impl(basis, seed, false);
}

std::vector<CheckResult> run_validation_suite(int jmax) {
  std::vector<CheckResult> results;

  // 3j orthogonality: sum_{j3,m3} (2j3+1) w3j^2 = 1.
  {
    double worst = 0.0;
    for (int j1 = 0; j1 <= 4; ++j1) {
      for (int j2 = 0; j2 <= 4; ++j2) {
        for (int m1 = -j1; m1 <= j1; ++m1) {
          for (int m2 = -j2; m2 <= j2; ++m2) {
            double sum = 0.0;
            for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; ++j3) {
              const double w = wigner3j(j1, j2, j3, m1, m2, -(m1 + m2));
              sum += (2 * j3 + 1) * w * w;
            }
            worst = std::max(worst, std::abs(sum - 1.0));
          }
        }
      }
    }
    results.push_back({"wigner3j_orthogonality", worst < 1e-10, "max defect " + fmt(worst)});
  }

  const Basis basis = Basis::enumerate(jmax);
  RotorSpec rotor;
  rotor.jmax = jmax;
  rotor.c = 0.5;
  const OperatorSet ops = build_operator_set(rotor, basis);

  // Hermiticity of the three position matrices.
  {
    const double defect = std::max({hermiticity_defect(ops.x), hermiticity_defect(ops.y),
                                    hermiticity_defect(ops.z)});
    results.push_back({"position_hermiticity", defect < 1e-12, "max defect " + fmt(defect)});
  }

  // K conservation: every stored element couples equal K labels.
  {
    bool pass = true;
    for (const OperatorMatrix* op : {&ops.x, &ops.y, &ops.z}) {
      for (int outer = 0; outer < op->entries.outerSize(); ++outer) {
        for (Eigen::SparseMatrix<Complex>::InnerIterator it(op->entries, outer); it; ++it) {
          if (basis.state(static_cast<int>(it.row())).k !=
              basis.state(static_cast<int>(it.col())).k) {
            pass = false;
          }
        }
      }
    }
    results.push_back({"k_conservation", pass, pass ? "all elements K-diagonal" : "violation"});
  }

  // trace(A) = 4*mu*b and det(A) > 0 on random interior states.
  {
    double worst_trace = 0.0;
    double min_det = std::numeric_limits<double>::infinity();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const WaveFunction psi = random_interior_state(basis, seed);
      const TrackingMatrix a = build_tracking_matrix(psi, ops, rotor.mu);
      worst_trace = std::max(worst_trace,
                             std::abs(a.a.trace() / (4.0 * rotor.mu * rotor.b) - 1.0));
      min_det = std::min(min_det, a.a.determinant());
    }
    results.push_back({"tracking_trace", worst_trace < 1e-8, "max defect " + fmt(worst_trace)});
    results.push_back({"tracking_det_positive", min_det > 0.0, "min det " + fmt(min_det)});
  }

  // Unitarity smoke test: 50 driven steps keep the norm at 1.
  {
    WaveFunction psi = random_interior_state(basis, 42);
    const FieldSample fields{0.8, -0.5, 1.1, 0.0};
    const HamiltonianOperator h{&ops, rotor.mu, fields};
    for (int i = 0; i < 50; ++i) psi = step(psi, h, 1e-3);
    const double drift = std::abs(psi.norm() - 1.0);
    results.push_back({"unitarity", drift < 1e-9, "norm drift " + fmt(drift)});
  }

  // Free evolution keeps <H0> constant.
  {
    WaveFunction psi = random_interior_state(basis, 7);
    const HamiltonianOperator h{&ops, rotor.mu, FieldSample{}};
    const double e0 = (ops.h0.asDiagonal() * psi.amplitudes).dot(psi.amplitudes).real();
    for (int i = 0; i < 50; ++i) psi = step(psi, h, 1e-2);
    const double e1 = (ops.h0.asDiagonal() * psi.amplitudes).dot(psi.amplitudes).real();
    const double drift = std::abs(e1 - e0);
    results.push_back({"free_energy_conservation", drift < 1e-10, "drift " + fmt(drift)});
  }

  return results;
}

}  // namespace qtrack
