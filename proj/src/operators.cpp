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

#include "qtrack/operators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "qtrack/errors.hpp"
#include "qtrack/wigner.hpp"

namespace qtrack {

namespace {

constexpr double kDropTolerance = 1e-15;
using Complex = std::complex<double>;
using Triplet = Eigen::Triplet<Complex>;

// (-1)^(2+2J'+M'-K'+2M), evaluated literally over the printed exponent.
double element_phase(int jp, int mp, int kp, int m) {
  const int exponent = 2 + 2 * jp + mp - kp + 2 * m;
  return (((exponent % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
}

Complex position_element(Axis axis, const BasisState& bra, const BasisState& ket) {
  if (ket.k != bra.k) return 0.0;
  if (std::abs(ket.j - bra.j) > 1) return 0.0;

  const int dm = ket.m - bra.m;
  if (axis == Axis::Z ? dm != 0 : std::abs(dm) != 1) return 0.0;

  const double norm = std::sqrt(double(2 * bra.j + 1) * double(2 * ket.j + 1));
  const double phase = element_phase(ket.j, ket.m, ket.k, bra.m);
  const double body = wigner3j(bra.j, 1, ket.j, bra.k, 0, -ket.k);
  const double space = wigner3j(bra.j, 1, ket.j, bra.m, dm, -ket.m);
  const double common = norm * phase * body * space;

  switch (axis) {
    case Axis::X:
      // Only the m = dm term of the two-term sum survives the space 3j.
      return Complex(-std::sqrt(0.5) * dm * common, 0.0);
    case Axis::Y:
      // 1/(2i) prefactor: elements are purely imaginary.
      return Complex(0.0, -std::sqrt(0.5) * common);
    case Axis::Z:
      return Complex(common, 0.0);
  }
  return 0.0;
}

void append_element(std::vector<Triplet>& triplets, int row, int col, Complex value) {
  if (std::abs(value) >= kDropTolerance) triplets.emplace_back(row, col, value);
}

// Visits the selection-rule-allowed ket labels of a bra and collects the
// nonzero elements produced by `element`.
template <typename ElementFn>
OperatorMatrix build_selection_rule_matrix(Axis axis, const Basis& basis, ElementFn element) {
  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(basis.dim()) * 4);

  const std::vector<int> dms = (axis == Axis::Z) ? std::vector<int>{0} : std::vector<int>{-1, 1};
  for (int row = 0; row < basis.dim(); ++row) {
    const BasisState& bra = basis.state(row);
    // dJ = 0 contributes only on K != 0 blocks (the body-frame 3j kills it
    // at K = 0); it carries the static orientation of a spinning top.
    for (int dj : {-1, 0, 1}) {
      for (int dm : dms) {
        const BasisState ket{bra.j + dj, bra.k, bra.m + dm};
        if (!basis.contains(ket)) continue;
        append_element(triplets, row, basis.index_of(ket), element(bra, ket));
      }
    }
  }

  OperatorMatrix op;
  op.entries.resize(basis.dim(), basis.dim());
  op.entries.setFromTriplets(triplets.begin(), triplets.end());
  op.entries.makeCompressed();
  op.hermitian = true;
  return op;
}

}  // namespace

double h0_eigenvalue(int j, int k, double b, double c) {
  if (j < 0 || std::abs(k) > j) {
    throw DomainError("h0_eigenvalue: |K| must not exceed J");
  }
  return b * j * (j + 1) + (c - b) * k * k;
}

OperatorMatrix position_matrix(Axis axis, const Basis& basis) {
  return build_selection_rule_matrix(axis, basis, [axis](const BasisState& bra, const BasisState& ket) {
    return position_element(axis, bra, ket);
  });
}

OperatorMatrix triple_commutator_matrix(Axis axis, const Basis& basis, double b) {
  return build_selection_rule_matrix(axis, basis, [axis, b](const BasisState& bra, const BasisState& ket) {
    const double gap = b * (double(bra.j) * (bra.j + 1) - double(ket.j) * (ket.j + 1));
    return gap * gap * position_element(axis, bra, ket);
  });
}

OperatorSet build_operator_set(const RotorSpec& rotor, const Basis& basis) {
  if (rotor.kind == RotorKind::Linear && basis.k_fixed() != std::optional<int>(0)) {
    throw DomainError("linear rotor requires a K = 0 basis block");
  }

  OperatorSet ops;
  ops.basis = basis;
  ops.kind = rotor.kind;
  ops.b = rotor.b;
  ops.c = rotor.c;

  ops.h0.resize(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) {
    const BasisState& s = basis.state(i);
    ops.h0[i] = (rotor.kind == RotorKind::Linear)
                    ? rotor.b * double(s.j) * (s.j + 1)
                    : h0_eigenvalue(s.j, s.k, rotor.b, rotor.c);
  }

  ops.x = position_matrix(Axis::X, basis);
  ops.y = position_matrix(Axis::Y, basis);
  ops.z = position_matrix(Axis::Z, basis);
  ops.triple_x = triple_commutator_matrix(Axis::X, basis, rotor.b);
  ops.triple_y = triple_commutator_matrix(Axis::Y, basis, rotor.b);
  ops.triple_z = triple_commutator_matrix(Axis::Z, basis, rotor.b);
  return ops;
}

QuadraticExpectations quadratic_expectations(const WaveFunction& psi, const OperatorSet& ops,
                                             double boundary_threshold) {
  if (psi.basis != key_of(ops.basis)) {
    throw ContractViolation("quadratic_expectations: basis mismatch");
  }

  QuadraticExpectations q;
  q.boundary_pop = boundary_population(psi, ops.basis);
  if (q.boundary_pop > boundary_threshold) {
    throw TruncationError(q.boundary_pop, boundary_threshold);
  }

  // <A B> = <A psi | B psi> by hermiticity; one matvec per axis.
  const Eigen::VectorXcd ux = ops.x.entries * psi.amplitudes;
  const Eigen::VectorXcd uy = ops.y.entries * psi.amplitudes;
  const Eigen::VectorXcd uz = ops.z.entries * psi.amplitudes;

  q.xx = ux.squaredNorm();
  q.yy = uy.squaredNorm();
  q.zz = uz.squaredNorm();
  q.xy = ux.dot(uy).real();
  q.yz = uy.dot(uz).real();
  q.zx = uz.dot(ux).real();
  return q;
}

StateObservables observe(const WaveFunction& psi, const OperatorSet& ops,
                         double boundary_threshold) {
  if (psi.basis != key_of(ops.basis)) {
    throw ContractViolation("observe: basis mismatch");
  }

  StateObservables obs;
  obs.norm = psi.norm();
  obs.quad.boundary_pop = boundary_population(psi, ops.basis);
  if (obs.quad.boundary_pop > boundary_threshold) {
    throw TruncationError(obs.quad.boundary_pop, boundary_threshold);
  }

  const Eigen::VectorXcd ux = ops.x.entries * psi.amplitudes;
  const Eigen::VectorXcd uy = ops.y.entries * psi.amplitudes;
  const Eigen::VectorXcd uz = ops.z.entries * psi.amplitudes;

  obs.position[0] = psi.amplitudes.dot(ux).real();
  obs.position[1] = psi.amplitudes.dot(uy).real();
  obs.position[2] = psi.amplitudes.dot(uz).real();

  obs.quad.xx = ux.squaredNorm();
  obs.quad.yy = uy.squaredNorm();
  obs.quad.zz = uz.squaredNorm();
  obs.quad.xy = ux.dot(uy).real();
  obs.quad.yz = uy.dot(uz).real();
  obs.quad.zx = uz.dot(ux).real();

  const OperatorMatrix* triples[3] = {&ops.triple_x, &ops.triple_y, &ops.triple_z};
  for (int a = 0; a < 3; ++a) {
    const Complex v = psi.amplitudes.dot(triples[a]->entries * psi.amplitudes);
    obs.free_accel[a] = v.real();
    obs.free_accel_max_imag = std::max(obs.free_accel_max_imag, std::abs(v.imag()));
  }
  return obs;
}

void dump_matrix_elements(std::ostream& os, const OperatorMatrix& op, const Basis& basis,
                          const DumpFilter& filter) {
  const auto in_range = [&filter](const BasisState& s) {
    return s.j >= filter.j_lo && s.j <= filter.j_hi && s.k >= filter.k_lo &&
           s.k <= filter.k_hi && s.m >= filter.m_lo && s.m <= filter.m_hi;
  };

  // Row-major over the canonical ordering. Eigen's column-major storage is
  // walked transposed, which visits (row, col) pairs in exactly that order
  // for Hermitian patterns; sort explicitly instead to keep it unconditional.
  struct Row {
    int row, col;
    Complex v;
  };
  std::vector<Row> rows;
  for (int outer = 0; outer < op.entries.outerSize(); ++outer) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(op.entries, outer); it; ++it) {
      rows.push_back({static_cast<int>(it.row()), static_cast<int>(it.col()), it.value()});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  const auto previous = os.precision(16);
  for (const Row& r : rows) {
    const BasisState& bra = basis.state(r.row);
    const BasisState& ket = basis.state(r.col);
    if (!in_range(bra) || !in_range(ket)) continue;
    os << bra.j << ' ' << bra.k << ' ' << bra.m << ' ' << ket.j << ' ' << ket.k
       << ' ' << ket.m << ' ' << r.v.real() << ' ' << r.v.imag() << '\n';
  }
  os.precision(previous);
}

}  // namespace qtrack
