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

#ifndef KPRES_LINALG_HPP
#define KPRES_LINALG_HPP

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "kpres/matrix.hpp"

// Decomposition services (LU inverse, SVD, Hermitian eigensolver,
// least-squares) behind the library's own matrix type. Eigen is an
// implementation detail of this header only.

namespace kpres {

namespace detail {

inline Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline Matrix from_eigen(const Eigen::MatrixXcd& e) {
  Matrix m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

}  // namespace detail

inline std::vector<double> singular_values(const Matrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(m));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

/// sigma_max / sigma_min; +inf when numerically rank deficient.
inline double cond_number(const Matrix& m) {
  auto sv = singular_values(m);
  if (sv.empty() || sv.back() == 0.0) return std::numeric_limits<double>::infinity();
  return sv.front() / sv.back();
}

inline bool is_invertible(const Matrix& m, const ToleranceConfig& tol = {}) {
  if (!m.square()) return false;
  return cond_number(m) < 1.0 / tol.abs_tol;
}

/// Inverse by pivoted elimination. The conditioning gate runs first so that
/// near-singular inputs fail loudly instead of returning garbage.
inline Matrix inverse(const Matrix& m, const ToleranceConfig& tol = {}) {
  require(m.square(), ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  require(is_invertible(m, tol), ErrorCode::SingularMatrix,
          "matrix numerically singular");
  Eigen::MatrixXcd e = detail::to_eigen(m);
  return detail::from_eigen(e.partialPivLu().inverse());
}

/// Solve A X = B (least squares when A is rectangular or ill conditioned).
inline Matrix solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorCode::ShapeMismatch, "solve shape mismatch");
  Eigen::MatrixXcd x = detail::to_eigen(a).colPivHouseholderQr().solve(detail::to_eigen(b));
  return detail::from_eigen(x);
}

/// Numerical rank: singular values above abs_tol * sigma_max.
inline int numeric_rank(const Matrix& m, const ToleranceConfig& tol = {}) {
  auto sv = singular_values(m);
  if (sv.empty()) return 0;
  double cut = tol.abs_tol * sv.front();
  int r = 0;
  for (double s : sv)
    if (s > cut) ++r;
  return r;
}

struct NullspaceResult {
  Matrix vector;     // cols(M) x 1, unit norm, deterministic phase
  double sigma_min;  // smallest singular value (zero-padded when cols > rows)
  double gap;        // distance to the next singular value; +inf when cols == 1
};

/// Right singular vector of the smallest singular value, the value itself,
/// and the gap to the next one. Deterministic given M.
inline NullspaceResult nullspace_min_singular(const Matrix& m) {
  require(m.frobenius_norm() > 0.0, ErrorCode::BadArgument, "nullspace of zero matrix");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(m), Eigen::ComputeFullV);
  int cols = m.cols();
  const auto& sv = svd.singularValues();
  // Singular values padded with exact zeros when the matrix is wide.
  std::vector<double> ext(static_cast<size_t>(cols), 0.0);
  for (int i = 0; i < sv.size() && i < cols; ++i) ext[static_cast<size_t>(i)] = sv(i);
  NullspaceResult out;
  out.sigma_min = ext[static_cast<size_t>(cols - 1)];
  out.gap = cols >= 2 ? ext[static_cast<size_t>(cols - 2)] - out.sigma_min
                      : std::numeric_limits<double>::infinity();
  Eigen::VectorXcd v = svd.matrixV().col(cols - 1);
  // Deterministic phase: rotate the largest-magnitude entry to the positive
  // real axis.
  int anchor = 0;
  double best = -1.0;
  for (int i = 0; i < cols; ++i) {
    double a = std::abs(v(i));
    if (a > best + 1e-15) {
      best = a;
      anchor = i;
    }
  }
  if (best > 0.0) v *= std::conj(v(anchor)) / std::abs(v(anchor));
  Matrix col(cols, 1);
  for (int i = 0; i < cols; ++i) col(i, 0) = v(i);
  out.vector = col;
  return out;
}

/// Unitary Q factor of a square matrix, with the phases fixed so that the
/// R diagonal is positive.
inline Matrix qr_unitary(const Matrix& m) {
  require(m.square(), ErrorCode::ShapeMismatch, "QR factor of non-square matrix");
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(detail::to_eigen(m));
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < q.cols(); ++i) {
    Scalar d = r(i, i);
    double mag = std::abs(d);
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return detail::from_eigen(q);
}

struct HermitianEig {
  std::vector<double> values;  // ascending
  Matrix vectors;              // unitary, columns are eigenvectors
};

/// Eigendecomposition of the Hermitian part (A + A*)/2.
inline HermitianEig hermitian_eig(const Matrix& a) {
  require(a.square(), ErrorCode::ShapeMismatch, "eigendecomposition of non-square matrix");
  Eigen::MatrixXcd h = detail::to_eigen(a);
  h = (h + h.adjoint().eval()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  require(es.info() == Eigen::Success, ErrorCode::SingularMatrix,
          "hermitian eigensolver failed");
  HermitianEig out;
  const auto& ev = es.eigenvalues();
  out.values.assign(ev.data(), ev.data() + ev.size());
  out.vectors = detail::from_eigen(es.eigenvectors());
  return out;
}

}  // namespace kpres

#endif  // KPRES_LINALG_HPP
