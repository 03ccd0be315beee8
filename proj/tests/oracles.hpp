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

// Independent reference implementations used only by tests. Nothing here may
// call into the library paths it checks: the 3j oracle uses direct long-double
// factorial arithmetic (no logs), matrix elements come from Euler-angle
// quadrature of the eigenfunctions, propagation from an explicit RK4
// integrator, and the 3x3 solve from the adjugate formula.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "qtrack/basis.hpp"
#include "qtrack/operators.hpp"

namespace oracle {

/// Racah sum with exact long-double factorials (exact through 20!).
double wigner3j_exact(int j1, int j2, int j3, int m1, int m2, int m3);

/// Wigner little-d matrix element d^j_{mp,m}(theta), explicit factorial sum.
double little_d(int j, int mp, int m, double theta);

/// Symmetric-top eigenfunction <theta phi chi|JKM>.
std::complex<double> symtop_eigenfunction(const qtrack::BasisState& s, double theta,
                                          double phi, double chi);

/// <bra| R_axis |ket> by 3D quadrature over (theta, phi, chi):
/// Gauss-Legendre in theta, uniform rules in the periodic angles.
std::complex<double> quadrature_position_element(qtrack::Axis axis,
                                                 const qtrack::BasisState& bra,
                                                 const qtrack::BasisState& ket);

/// <bra| f(theta,phi) |ket> for an arbitrary multiplicative operator.
std::complex<double> quadrature_element(const std::function<double(double, double)>& f,
                                        const qtrack::BasisState& bra,
                                        const qtrack::BasisState& ket);

/// Dense position matrix built from an independently coded element formula
/// (separate phase/prefactor arithmetic on top of wigner3j_exact).
Eigen::MatrixXcd dense_position_matrix(qtrack::Axis axis, const qtrack::Basis& basis);

/// Dense diagonal of the field-free Hamiltonian.
Eigen::MatrixXcd dense_h0(const qtrack::Basis& basis, double b, double c);

/// Classic fixed-step RK4 on i d/dt psi = H psi with constant H.
Eigen::VectorXcd rk4_schrodinger(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& psi0,
                                 double total_time, int substeps);

/// 3x3 solve by explicit adjugate (Cramer); throws on zero determinant.
Eigen::Vector3d adjugate_solve3(const Eigen::Matrix3d& a, const Eigen::Vector3d& b);

}  // namespace oracle
