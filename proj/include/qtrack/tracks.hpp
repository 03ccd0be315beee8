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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qtrack/operators.hpp"
#include "qtrack/state.hpp"

namespace qtrack {

enum class TrigKind { Sin, Cos };

/// Gaussian-windowed sinusoid amplitude * exp(-((t-center)/width)^2) * trig(omega*t)
/// with closed-form first and second derivatives.
struct GaussianSinusoid {
  double amplitude = 0;
  double center = 0;
  double width = 1;
  double omega = 0;
  TrigKind trig = TrigKind::Sin;

  double value(double t) const;
  double d1(double t) const;
  double d2(double t) const;
};

/// Natural cubic spline through tabulated samples; C2, with the interpolant's
/// analytic second derivative (piecewise linear).
class CubicSplineTrack {
 public:
  explicit CubicSplineTrack(std::vector<std::pair<double, double>> samples);

  double value(double t) const;
  double d1(double t) const;
  double d2(double t) const;

 private:
  std::size_t segment(double t) const;
  std::vector<double> t_, y_, second_;
};

/// One scalar designated-track component with analytic derivatives.
class ScalarTrack {
 public:
  ScalarTrack() : impl_(GaussianSinusoid{}) {}
  explicit ScalarTrack(GaussianSinusoid g) : impl_(std::move(g)) {}
  explicit ScalarTrack(CubicSplineTrack s) : impl_(std::move(s)) {}

  double value(double t) const {
    return std::visit([t](const auto& f) { return f.value(t); }, impl_);
  }
  double d1(double t) const {
    return std::visit([t](const auto& f) { return f.d1(t); }, impl_);
  }
  double d2(double t) const {
    return std::visit([t](const auto& f) { return f.d2(t); }, impl_);
  }

 private:
  std::variant<GaussianSinusoid, CubicSplineTrack> impl_;
};

/// Throws DomainError for width <= 0.
ScalarTrack gaussian_sinusoid_track(double amplitude, double center, double width,
                                    double angular_frequency, TrigKind trig);

/// Natural-spline interpolant; needs >= 4 samples with strictly increasing t.
ScalarTrack tabulated_track(std::vector<std::pair<double, double>> samples);

/// Reads the two-column "t value" plain-text format ('#' comments allowed).
std::vector<std::pair<double, double>> read_track_samples(const std::string& path);

/// The three designated orientation components.
struct TrackSet {
  ScalarTrack x, y, z;

  Eigen::Vector3d value(double t) const { return {x.value(t), y.value(t), z.value(t)}; }
  Eigen::Vector3d d1(double t) const { return {x.d1(t), y.d1(t), z.d1(t)}; }
  Eigen::Vector3d d2(double t) const { return {x.d2(t), y.d2(t), z.d2(t)}; }
};

/// Mismatch between the initial state and the track at t = 0. The first
/// derivative of the orientation has no field dependence, so neither offset
/// is controllable; a nonzero offset persists for the whole run.
struct CompatibilityReport {
  Eigen::Vector3d value_offset = Eigen::Vector3d::Zero();     // <R>(0) - <R>_d(0)
  Eigen::Vector3d velocity_offset = Eigen::Vector3d::Zero();  // d<R>/dt(0) - d<R>_d/dt(0)
  bool within(double tol) const {
    return value_offset.lpNorm<Eigen::Infinity>() <= tol &&
           velocity_offset.lpNorm<Eigen::Infinity>() <= tol;
  }
};

CompatibilityReport compatibility_report(const TrackSet& tracks, const WaveFunction& psi0,
                                         const OperatorSet& ops);

}  // namespace qtrack
