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

#ifndef KPRES_MATRIX_HPP
#define KPRES_MATRIX_HPP

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "kpres/core.hpp"

namespace kpres {

/// Dense row-major complex matrix. Immutable by convention once handed to
/// another component; all operations return fresh values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Scalar(0.0, 0.0)) {
    require(rows > 0 && cols > 0, ErrorCode::BadArgument, "matrix dimensions must be positive");
  }
  Matrix(int rows, int cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    require(rows > 0 && cols > 0, ErrorCode::BadArgument, "matrix dimensions must be positive");
    require(a_.size() == static_cast<size_t>(rows) * cols, ErrorCode::ShapeMismatch,
            "entry count does not match dimensions");
  }
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = static_cast<int>(rows.size());
    require(rows_ > 0, ErrorCode::BadArgument, "empty matrix literal");
    cols_ = static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      require(static_cast<int>(r.size()) == cols_, ErrorCode::ShapeMismatch,
              "ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int n) {
    Matrix I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = Scalar(1.0, 0.0);
    return I;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const std::vector<Scalar>& d) {
    Matrix D(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) D(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return D;
  }
  /// Matrix unit E_ij inside an n-by-n matrix (zero-based indices).
  static Matrix unit(int n, int i, int j) {
    Matrix E(n, n);
    E(i, j) = Scalar(1.0, 0.0);
    return E;
  }
  /// Anti-diagonal identity.
  static Matrix anti_identity(int n) {
    Matrix J(n, n);
    for (int i = 0; i < n; ++i) J(i, n - 1 - i) = Scalar(1.0, 0.0);
    return J;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0; }

  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<Scalar>& data() const { return a_; }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Matrix& operator*=(Scalar s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Scalar s) { return a *= s; }
  friend Matrix operator*(Scalar s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1.0, 0.0); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::ShapeMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        Scalar aik = a(i, k);
        if (aik == Scalar(0.0, 0.0)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix conjugate() const {
    Matrix c = *this;
    for (auto& x : c.a_) x = std::conj(x);
    return c;
  }
  Matrix adjoint() const { return transpose().conjugate(); }
  /// Flip along the anti-diagonal: out(i,j) = in(n-1-j, n-1-i).
  Matrix anti_transpose() const {
    require(square(), ErrorCode::ShapeMismatch, "anti-transpose of non-square matrix");
    Matrix t(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(i, j) = (*this)(rows_ - 1 - j, cols_ - 1 - i);
    return t;
  }
  Matrix real_part() const {
    Matrix c = *this;
    for (auto& x : c.a_) x = Scalar(x.real(), 0.0);
    return c;
  }
  Matrix imag_part() const {
    Matrix c = *this;
    for (auto& x : c.a_) x = Scalar(x.imag(), 0.0);
    return c;
  }

  Scalar trace() const {
    require(square(), ErrorCode::ShapeMismatch, "trace of non-square matrix");
    Scalar t(0.0, 0.0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }
  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : a_) s += std::norm(x);
    return std::sqrt(s);
  }
  double max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
  }
  bool all_finite() const {
    return std::all_of(a_.begin(), a_.end(), scalar_finite);
  }
  double max_imag_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x.imag()));
    return m;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::ShapeMismatch,
            "matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

/// tr(A* B). Conjugate-linear in the first argument.
inline Scalar frobenius_inner(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::ShapeMismatch,
          "frobenius inner product needs equal shapes");
  Scalar s(0.0, 0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += std::conj(a(i, j)) * b(i, j);
  return s;
}

/// ||X - Y||_F / max(1, ||X||_F, ||Y||_F).
inline double rel_residual(const Matrix& x, const Matrix& y) {
  return (x - y).frobenius_norm() /
         std::max({1.0, x.frobenius_norm(), y.frobenius_norm()});
}

inline double rel_residual(Scalar x, Scalar y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

/// ||X - Y||_F <= rel_tol * max(1, ||X||, ||Y||) + abs_tol.
inline bool approx_equal(const Matrix& x, const Matrix& y, const ToleranceConfig& tol) {
  double diff = (x - y).frobenius_norm();
  return diff <= tol.rel_tol * std::max({1.0, x.frobenius_norm(), y.frobenius_norm()}) +
                     tol.abs_tol;
}

}  // namespace kpres

#endif  // KPRES_MATRIX_HPP
