// Copyright 2026 The sgd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgd/matrix.hpp"

namespace sgd {

inline constexpr double kDefaultClusterTolerance = 1e-6;

inline double frobenius_norm(const RealMatrix& m) {
  double sum = 0;
  for (double x : m.data()) sum += x * x;
  return std::sqrt(sum);
}

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted descending. Sweeps until the off-diagonal Frobenius norm drops
/// to 1e-12 * ||M||_F.
inline std::vector<double> jacobi_eigenvalues(RealMatrix a, std::size_t max_sweeps = 100) {
  a.require_square("symmetric eigensolver");
  const std::size_t n = a.rows();
  const double scale = frobenius_norm(a);
  const double target = 1e-12 * (scale > 0 ? scale : 1.0);

  auto off_norm = [&] {
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
  };

  for (std::size_t sweep = 0; sweep < max_sweeps && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation annihilating a(p,q); t is the smaller root of
        // t^2 + 2 theta t - 1 = 0 for numerical stability.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  if (off_norm() > target) throw std::runtime_error("Jacobi eigensolver did not converge");

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

struct SpectrumEntry {
  double value;
  std::size_t multiplicity;
};

/// Distinct eigenvalues (descending) with multiplicities.
struct Spectrum {
  std::vector<SpectrumEntry> entries;
  double tolerance = kDefaultClusterTolerance;

  std::size_t total_multiplicity() const {
    std::size_t sum = 0;
    for (const auto& e : entries) sum += e.multiplicity;
    return sum;
  }

  /// Each eigenvalue repeated by multiplicity, descending.
  std::vector<double> expanded() const {
    std::vector<double> out;
    for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
    return out;
  }

  bool is_integral(double tol = 1e-6) const {
    return std::all_of(entries.begin(), entries.end(),
                       [&](const SpectrumEntry& e) { return std::abs(e.value - std::round(e.value)) <= tol; });
  }

  /// "(15 ×1) (0 ×4) (-3 ×5)". Values within 1e-9 of an integer print as
  /// integers, anything else with six decimals.
  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out << ' ';
      out << '(' << format_value(entries[i].value) << " ×" << entries[i].multiplicity << ')';
    }
    return out.str();
  }

  static std::string format_value(double v) {
    std::ostringstream out;
    const double r = std::round(v);
    if (std::abs(v - r) <= 1e-9) {
      out << static_cast<long long>(r);
    } else {
      out << std::fixed << std::setprecision(6) << v;
    }
    return out.str();
  }
};

/// Splits sorted values where neighbouring gaps exceed `tol`; each cluster
/// reports its mean.
inline Spectrum cluster_eigenvalues(std::vector<double> values, double tol = kDefaultClusterTolerance) {
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum spec;
  spec.tolerance = tol;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i - 1] - values[i] > tol) {
      double sum = 0;
      for (std::size_t k = start; k < i; ++k) sum += values[k];
      spec.entries.push_back({sum / static_cast<double>(i - start), i - start});
      start = i;
    }
  }
  return spec;
}

/// Numeric spectrum of a symmetric integer matrix.
inline Spectrum eig_symmetric(const IntMatrix& m, double tol = kDefaultClusterTolerance) {
  m.require_square("symmetric eigensolver");
  if (!m.is_symmetric()) throw std::invalid_argument("eigensolver requires a symmetric matrix");
  return cluster_eigenvalues(jacobi_eigenvalues(m.cast<double>()), tol);
}

}  // namespace sgd
