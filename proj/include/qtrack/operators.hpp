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

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <iosfwd>
#include <limits>

#include "qtrack/basis.hpp"
#include "qtrack/rotor.hpp"
#include "qtrack/state.hpp"

namespace qtrack {

enum class Axis { X, Y, Z };

/// Sparse operator over a Basis ordering. Selection rules keep every row at
/// O(1) nonzeros; entries below 1e-15 absolute are dropped at construction.
struct OperatorMatrix {
  Eigen::SparseMatrix<std::complex<double>> entries;
  bool hermitian = false;

  Eigen::Index dim() const { return entries.rows(); }
};

/// Rotational eigenvalue B*J(J+1) + (C-B)*K^2. Throws DomainError for |K| > J.
double h0_eigenvalue(int j, int k, double b, double c);

/// Space-fixed position operator (X, Y or Z) in the |JKM> basis. Elements
/// follow the 3j-symbol expressions with normalization sqrt((2J+1)(2J'+1))
/// and phase (-1)^(2+2J'+M'-K'+2M); only the selection-rule-allowed pairs
/// (|J' - J| <= 1, K' = K, and M' = M+-1 for X/Y, M' = M for Z) are stored.
/// The J' = J elements vanish identically on K = 0 blocks but are nonzero
/// for K != 0 (they carry the first-order static orientation KM/(J(J+1))).
OperatorMatrix position_matrix(Axis axis, const Basis& basis);

/// Double commutator of H0 with a position operator. Element (JKM, J'K'M')
/// is (B(J(J+1) - J'(J'+1)))^2 * <JKM|R|J'K'M'>; the K^2 parts of the
/// eigenvalues cancel because K' = K, so C never enters.
OperatorMatrix triple_commutator_matrix(Axis axis, const Basis& basis, double b);

/// All operator data one simulation needs, built once and immutable after
/// construction; safe to share across concurrent runs.
struct OperatorSet {
  Basis basis;
  RotorKind kind = RotorKind::SymmetricTop;
  double b = 1.0;
  double c = 1.0;
  Eigen::VectorXd h0;  // diagonal of the field-free Hamiltonian
  OperatorMatrix x, y, z;
  OperatorMatrix triple_x, triple_y, triple_z;
};

/// Builds the basis-wide operator set. For RotorKind::Linear the diagonal is
/// B*J(J+1) (the basis must be a K = 0 block) and C is never read.
OperatorSet build_operator_set(const RotorSpec& rotor, const Basis& basis);

/// Second moments of the position operators, <A B> = Re<psi|A B|psi> with the
/// cross terms symmetrized. Requires the truncation-shell population to stay
/// below boundary_threshold; throws TruncationError with the measured leakage
/// otherwise. Pass +inf to disable the check.
struct QuadraticExpectations {
  double xx = 0, yy = 0, zz = 0;
  double xy = 0, yz = 0, zx = 0;
  double boundary_pop = 0;
};

QuadraticExpectations quadratic_expectations(const WaveFunction& psi,
                                             const OperatorSet& ops,
                                             double boundary_threshold = 1e-8);

/// Everything the tracking loop reads from one state, computed in a single
/// pass over the sparse matrices.
struct StateObservables {
  Eigen::Vector3d position;      // <X>, <Y>, <Z>
  Eigen::Vector3d free_accel;    // <[H0,[H0,R]]> per axis (real parts)
  double free_accel_max_imag = 0;
  QuadraticExpectations quad;
  double norm = 0;
};

StateObservables observe(const WaveFunction& psi, const OperatorSet& ops,
                         double boundary_threshold = std::numeric_limits<double>::infinity());

/// Plain-text element dump, rows "J K M J' K' M' re im" sorted by canonical
/// index pairs. Optional inclusive ranges filter both bra and ket labels.
struct DumpFilter {
  int j_lo = 0, j_hi = std::numeric_limits<int>::max();
  int k_lo = std::numeric_limits<int>::min(), k_hi = std::numeric_limits<int>::max();
  int m_lo = std::numeric_limits<int>::min(), m_hi = std::numeric_limits<int>::max();
};

void dump_matrix_elements(std::ostream& os, const OperatorMatrix& op,
                          const Basis& basis, const DumpFilter& filter = {});

}  // namespace qtrack
