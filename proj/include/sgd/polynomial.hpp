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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgd/matrix.hpp"

namespace sgd {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with exact integer coefficients, stored lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

  /// Builds from coefficients listed highest degree first, the way
  /// polynomials are usually written down.
  static IntPolynomial from_descending(std::initializer_list<BigInt> descending) {
    return IntPolynomial(std::vector<BigInt>(std::rbegin(descending), std::rend(descending)));
  }

  static IntPolynomial from_descending(const std::vector<BigInt>& descending) {
    return IntPolynomial(std::vector<BigInt>(descending.rbegin(), descending.rend()));
  }

  /// Degree; the zero polynomial reports 0.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^k (zero beyond the degree).
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  const std::vector<BigInt>& ascending() const noexcept { return coeffs_; }
  std::vector<BigInt> descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

  /// Horner evaluation in long double.
  long double evaluate(long double x) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + it->convert_to<long double>();
    }
    return acc;
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Human-readable form, e.g. "λ^10 - 135λ^8 - 1080λ^7".
  std::string to_string(const std::string& var = "λ") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (mag != 1 || k == 0) out << mag;
      if (k >= 1) out << var;
      if (k >= 2) out << '^' << k;
    }
    return out.str();
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend auto operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
      if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k] ? std::strong_ordering::less
                                                                           : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

namespace detail {

struct Overflow {};

/// int64 that throws Overflow instead of wrapping.
struct CheckedInt {
  std::int64_t v = 0;

  CheckedInt() = default;
  CheckedInt(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator-(CheckedInt a) {
    if (a.v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -a.v;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return a.v / b.v; }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) { return a.v % b.v; }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v == b.v; }
  CheckedInt& operator+=(CheckedInt b) { return *this = *this + b; }

  BigInt to_big() const { return BigInt(v); }
};

inline BigInt to_big(const CheckedInt& x) { return x.to_big(); }
inline BigInt to_big(const BigInt& x) { return x; }

/// Faddeev-LeVerrier: N_1 = I, c_{n-1} = -tr(A); N_{k+1} = A N_k + c_{n-k} I,
/// c_{n-k-1} = -tr(A N_{k+1}) / (k+1). Every division is exact for integer A.
template <typename Int>
std::vector<BigInt> faddeev_leverrier(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Int> coeff(n + 1, Int(0));  // descending: coeff[k] multiplies x^{n-k}
  coeff[0] = Int(1);

  std::vector<Int> A(n * n), N(n * n, Int(0)), AN(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i * n + j] = Int(a(i, j));
  for (std::size_t i = 0; i < n; ++i) N[i * n + i] = Int(1);

  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int sum(0);
        for (std::size_t l = 0; l < n; ++l) {
          if (A[i * n + l] == Int(0)) continue;
          sum += A[i * n + l] * N[l * n + j];
        }
        AN[i * n + j] = sum;
      }
    Int trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += AN[i * n + i];
    const Int kk(static_cast<std::int64_t>(k));
    if (!(trace % kk == Int(0))) throw std::logic_error("inexact Faddeev-LeVerrier division");
    coeff[k] = -(trace / kk);
    if (k == n) break;
    N = AN;
    for (std::size_t i = 0; i < n; ++i) N[i * n + i] += coeff[k];
  }

  std::vector<BigInt> ascending;
  ascending.reserve(n + 1);
  for (std::size_t k = n + 1; k-- > 0;) ascending.push_back(to_big(coeff[k]));
  return ascending;
}

}  // namespace detail

/// Exact det(xI - M). Runs in checked 64-bit arithmetic and reruns with
/// arbitrary precision if any intermediate overflows.
inline IntPolynomial char_poly(const IntMatrix& m) {
  m.require_square("characteristic polynomial");
  try {
    return IntPolynomial(detail::faddeev_leverrier<detail::CheckedInt>(m));
  } catch (const detail::Overflow&) {
    return IntPolynomial(detail::faddeev_leverrier<BigInt>(m));
  }
}

}  // namespace sgd
