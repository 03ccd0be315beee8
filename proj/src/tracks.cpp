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

#include "qtrack/tracks.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qtrack/errors.hpp"

namespace qtrack {

double GaussianSinusoid::value(double t) const {
  const double u = (t - center) / width;
  const double env = amplitude * std::exp(-u * u);
  const double arg = omega * t;
  return env * (trig == TrigKind::Sin ? std::sin(arg) : std::cos(arg));
}

double GaussianSinusoid::d1(double t) const {
  const double u = (t - center) / width;
  const double env = amplitude * std::exp(-u * u);
  const double env_d1 = -2.0 * u / width * env;
  const double arg = omega * t;
  const double s = (trig == TrigKind::Sin) ? std::sin(arg) : std::cos(arg);
  const double s_d1 = (trig == TrigKind::Sin) ? omega * std::cos(arg) : -omega * std::sin(arg);
  return env_d1 * s + env * s_d1;
}

double GaussianSinusoid::d2(double t) const {
  const double u = (t - center) / width;
  const double env = amplitude * std::exp(-u * u);
  const double env_d1 = -2.0 * u / width * env;
  const double env_d2 = (4.0 * u * u - 2.0) / (width * width) * env;
  const double arg = omega * t;
  const double s = (trig == TrigKind::Sin) ? std::sin(arg) : std::cos(arg);
  const double s_d1 = (trig == TrigKind::Sin) ? omega * std::cos(arg) : -omega * std::sin(arg);
  const double s_d2 = -omega * omega * s;
  return env_d2 * s + 2.0 * env_d1 * s_d1 + env * s_d2;
}

CubicSplineTrack::CubicSplineTrack(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 4) {
    throw DomainError("tabulated track needs at least 4 samples");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].first > samples[i - 1].first)) {
      throw DomainError("tabulated track times must be strictly increasing");
    }
  }

  const std::size_t n = samples.size();
  t_.resize(n);
  y_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t_[i] = samples[i].first;
    y_[i] = samples[i].second;
  }

  // Natural boundary conditions: second derivative zero at both ends.
  // Thomas solve of the standard tridiagonal system for interior curvatures.
  second_.assign(n, 0.0);
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  diag[0] = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = t_[i] - t_[i - 1];
    const double h1 = t_[i + 1] - t_[i];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  diag[n - 1] = 1.0;

  std::vector<double> c_prime(n, 0.0), d_prime(n, 0.0);
  c_prime[0] = 0.0;
  d_prime[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double lower = (i + 1 < n) ? (t_[i] - t_[i - 1]) : 0.0;
    const double denom = diag[i] - lower * c_prime[i - 1];
    c_prime[i] = upper[i] / denom;
    d_prime[i] = (rhs[i] - lower * d_prime[i - 1]) / denom;
  }
  second_[n - 1] = d_prime[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    second_[i] = d_prime[i] - c_prime[i] * second_[i + 1];
  }
}

std::size_t CubicSplineTrack::segment(double t) const {
  if (t <= t_.front()) return 0;
  if (t >= t_.back()) return t_.size() - 2;
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  return static_cast<std::size_t>(it - t_.begin()) - 1;
}

double CubicSplineTrack::value(double t) const {
  const std::size_t i = segment(t);
  const double h = t_[i + 1] - t_[i];
  const double a = (t_[i + 1] - t) / h;
  const double b = (t - t_[i]) / h;
  return a * y_[i] + b * y_[i + 1] +
         ((a * a * a - a) * second_[i] + (b * b * b - b) * second_[i + 1]) * h * h / 6.0;
}

double CubicSplineTrack::d1(double t) const {
  const std::size_t i = segment(t);
  const double h = t_[i + 1] - t_[i];
  const double a = (t_[i + 1] - t) / h;
  const double b = (t - t_[i]) / h;
  return (y_[i + 1] - y_[i]) / h -
         (3.0 * a * a - 1.0) * h / 6.0 * second_[i] +
         (3.0 * b * b - 1.0) * h / 6.0 * second_[i + 1];
}

double CubicSplineTrack::d2(double t) const {
  const std::size_t i = segment(t);
  const double h = t_[i + 1] - t_[i];
  const double a = (t_[i + 1] - t) / h;
  const double b = (t - t_[i]) / h;
  return a * second_[i] + b * second_[i + 1];
}

ScalarTrack gaussian_sinusoid_track(double amplitude, double center, double width,
                                    double angular_frequency, TrigKind trig) {
  if (!(width > 0.0)) throw DomainError("gaussian_sinusoid_track: width must be positive");
  return ScalarTrack(GaussianSinusoid{amplitude, center, width, angular_frequency, trig});
}

ScalarTrack tabulated_track(std::vector<std::pair<double, double>> samples) {
  return ScalarTrack(CubicSplineTrack(std::move(samples)));
}

std::vector<std::pair<double, double>> read_track_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open track file: " + path);

  std::vector<std::pair<double, double>> samples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    double t, v;
    if (!(is >> t)) continue;  // blank or comment-only line
    if (!(is >> v)) {
      throw DomainError(path + ":" + std::to_string(lineno) + ": expected \"t value\"");
    }
    samples.emplace_back(t, v);
  }
  return samples;
}

CompatibilityReport compatibility_report(const TrackSet& tracks, const WaveFunction& psi0,
                                         const OperatorSet& ops) {
  if (psi0.basis != key_of(ops.basis)) {
    throw ContractViolation("compatibility_report: basis mismatch");
  }

  const Eigen::VectorXcd w = ops.h0.asDiagonal() * psi0.amplitudes;
  const OperatorMatrix* positions[3] = {&ops.x, &ops.y, &ops.z};

  CompatibilityReport report;
  for (int a = 0; a < 3; ++a) {
    const Eigen::VectorXcd u = positions[a]->entries * psi0.amplitudes;
    const double value = psi0.amplitudes.dot(u).real();
    // d<R>/dt = i<[H0,R]> = -2 Im <H0 psi | R psi> (field-free form).
    const double velocity = -2.0 * w.dot(u).imag();
    report.value_offset[a] = value - tracks.value(0.0)[a];
    report.velocity_offset[a] = velocity - tracks.d1(0.0)[a];
  }
  return report;
}

}  // namespace qtrack
