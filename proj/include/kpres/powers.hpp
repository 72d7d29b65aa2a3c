// Copyright 2026 The kpres authors
//
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

#ifndef KPRES_POWERS_HPP
#define KPRES_POWERS_HPP

#include <vector>

#include "kpres/linalg.hpp"

namespace kpres {

/// A^k for integer k. A^0 = I; negative powers go through the explicit
/// inverse of A (pivoted elimination), never through a spectral route.
inline Matrix mat_int_pow(const Matrix& a, int k, const ToleranceConfig& tol = {}) {
  require(a.square(), ErrorCode::ShapeMismatch, "integer power of non-square matrix");
  if (k == 0) return Matrix::identity(a.rows());
  Matrix base = k < 0 ? inverse(a, tol) : a;
  unsigned e = static_cast<unsigned>(k < 0 ? -(long long)k : k);
  Matrix acc = Matrix::identity(a.rows());
  while (e) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// Spectral power A^r of a Hermitian PSD matrix. Eigenvalues in
/// [-abs_tol*max(1,||A||), 0] are clamped to zero; anything below rejects.
/// Powers with negative exponent or even denominator need strictly positive
/// spectrum.
inline Matrix herm_frac_pow(const Matrix& a, const Rational& r, const ToleranceConfig& tol = {}) {
  require(a.square(), ErrorCode::ShapeMismatch, "fractional power of non-square matrix");
  double scale = std::max(1.0, a.frobenius_norm());
  require((a - a.adjoint()).frobenius_norm() <= tol.rel_tol * scale,
          ErrorCode::NotHermitian, "input is not Hermitian within tolerance");
  HermitianEig eig = hermitian_eig(a);
  bool needs_positive = r.num < 0 || r.denominator_even();
  double rexp = r.value();
  std::vector<Scalar> powered(eig.values.size());
  for (size_t i = 0; i < eig.values.size(); ++i) {
    double lam = eig.values[i];
    if (lam < -tol.abs_tol * scale)
      fail(ErrorCode::NotPSD, "negative eigenvalue beyond tolerance");
    if (lam < 0.0) lam = 0.0;
    if (needs_positive)
      require(lam > tol.abs_tol, ErrorCode::NotPSD,
              "exponent requires strictly positive spectrum");
    powered[i] = Scalar(lam == 0.0 ? 0.0 : std::pow(lam, rexp), 0.0);
  }
  Matrix d = Matrix::diagonal(powered);
  Matrix out = eig.vectors * d * eig.vectors.adjoint();
  // Re-hermitize to scrub roundoff.
  return (out + out.adjoint()) * Scalar(0.5, 0.0);
}

namespace detail {

/// Truncated product of two matrix power series.
inline std::vector<Matrix> series_mul(const std::vector<Matrix>& a,
                                      const std::vector<Matrix>& b, int order, int n) {
  std::vector<Matrix> c(static_cast<size_t>(order) + 1, Matrix::zero(n, n));
  for (int r = 0; r <= order; ++r)
    for (int s = 0; r + s <= order; ++s) {
      if (static_cast<size_t>(r) >= a.size() || static_cast<size_t>(s) >= b.size()) continue;
      c[static_cast<size_t>(r + s)] += a[static_cast<size_t>(r)] * b[static_cast<size_t>(s)];
    }
  return c;
}

}  // namespace detail

/// Coefficient matrices F_0..F_order of the formal expansion of
/// (M0 + x M1)^k. Positive k uses the noncommutative recurrence
/// step-by-step; negative k expands (I + x M0^{-1} M1)^{-1} as a geometric
/// series and composes it |k| times.
inline std::vector<Matrix> power_series_coeffs(const Matrix& m0, const Matrix& m1, int k,
                                               int order, const ToleranceConfig& tol = {}) {
  require(m0.square() && m1.square() && m0.rows() == m1.rows(), ErrorCode::ShapeMismatch,
          "series terms must be square and matched");
  require(order >= 0 && order <= 8, ErrorCode::BadArgument, "series order capped at 8");
  int n = m0.rows();
  std::vector<Matrix> cur(1, Matrix::identity(n));
  if (k >= 0) {
    for (int step = 0; step < k; ++step) {
      int top = std::min<int>(order, static_cast<int>(cur.size()));
      std::vector<Matrix> next(static_cast<size_t>(top) + 1, Matrix::zero(n, n));
      for (int r = 0; r <= top; ++r) {
        if (static_cast<size_t>(r) < cur.size()) next[static_cast<size_t>(r)] += cur[static_cast<size_t>(r)] * m0;
        if (r >= 1 && static_cast<size_t>(r - 1) < cur.size())
          next[static_cast<size_t>(r)] += cur[static_cast<size_t>(r - 1)] * m1;
      }
      cur = std::move(next);
    }
  } else {
    Matrix inv0 = inverse(m0, tol);
    Matrix neg_n = -(inv0 * m1);
    // (M0 + x M1)^{-1} = (sum_j (-x M0^{-1} M1)^j) M0^{-1}
    std::vector<Matrix> geo(static_cast<size_t>(order) + 1, Matrix::zero(n, n));
    Matrix term = Matrix::identity(n);
    for (int j = 0; j <= order; ++j) {
      geo[static_cast<size_t>(j)] = term * inv0;
      if (j < order) term = term * neg_n;
    }
    cur = geo;
    for (int rep = 1; rep < -k; ++rep) cur = detail::series_mul(cur, geo, order, n);
  }
  cur.resize(static_cast<size_t>(order) + 1, Matrix::zero(n, n));
  return cur;
}

}  // namespace kpres

#endif  // KPRES_POWERS_HPP
