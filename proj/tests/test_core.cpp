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

#include <catch2/catch_amalgamated.hpp>

#include "kpres/powers.hpp"
#include "kpres/rng.hpp"

using namespace kpres;

namespace {

Matrix random_square(int n, Rng& rng, bool complex_entries = true) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = complex_entries ? rng.normal_complex() : Scalar(rng.normal(), 0.0);
  return m;
}

Matrix random_pd(int n, Rng& rng) {
  Matrix g = random_square(n, rng);
  return g.adjoint() * g + Scalar(0.5, 0.0) * Matrix::identity(n);
}

// Generalized binomial coefficient C(k, r) for integer k.
double binom(int k, int r) {
  double c = 1.0;
  for (int i = 0; i < r; ++i) c = c * (k - i) / (i + 1);
  return c;
}

}  // namespace

TEST_CASE("mat_int_pow basics") {
  CHECK(rel_residual(mat_int_pow(Matrix::identity(3), 5), Matrix::identity(3)) < 1e-15);

  Matrix d = Matrix::diagonal({Scalar(2, 0), Scalar(3, 0)});
  Matrix dinv = mat_int_pow(d, -1);
  CHECK(std::abs(dinv(0, 0) - Scalar(0.5, 0)) < 1e-15);
  CHECK(std::abs(dinv(1, 1) - Scalar(1.0 / 3.0, 0)) < 1e-15);

  Matrix j{{Scalar(1, 0), Scalar(1, 0)}, {Scalar(0, 0), Scalar(1, 0)}};
  Matrix j2 = mat_int_pow(j, 2);
  CHECK(std::abs(j2(0, 1) - Scalar(2, 0)) < 1e-15);
  CHECK(std::abs(j2(0, 0) - Scalar(1, 0)) < 1e-15);

  Matrix sing{{Scalar(1, 0), Scalar(0, 0)}, {Scalar(0, 0), Scalar(0, 0)}};
  CHECK_THROWS_AS(mat_int_pow(sing, -1), Error);
}

TEST_CASE("mat_int_pow additivity in the exponent") {
  Rng rng(42);
  for (int n : {2, 4}) {
    Matrix a = random_square(n, rng) + Scalar(3, 0) * Matrix::identity(n);
    for (int j = -4; j <= 4; ++j)
      for (int k = -4; k <= 4; ++k) {
        Matrix lhs = mat_int_pow(a, j + k);
        Matrix rhs = mat_int_pow(a, j) * mat_int_pow(a, k);
        CHECK(rel_residual(lhs, rhs) < 1e-9);
      }
  }
}

TEST_CASE("herm_frac_pow basics") {
  CHECK(rel_residual(herm_frac_pow(Matrix::identity(4), Rational(1, 2)),
                     Matrix::identity(4)) < 1e-14);

  Matrix d = Matrix::diagonal({Scalar(4, 0), Scalar(9, 0)});
  Matrix s = herm_frac_pow(d, Rational(1, 2));
  CHECK(std::abs(s(0, 0) - Scalar(2, 0)) < 1e-14);
  CHECK(std::abs(s(1, 1) - Scalar(3, 0)) < 1e-14);

  Matrix not_herm{{Scalar(0, 0), Scalar(1, 0)}, {Scalar(0, 0), Scalar(0, 0)}};
  CHECK_THROWS_AS(herm_frac_pow(not_herm, Rational(1, 2)), Error);

  Matrix indef = Matrix::diagonal({Scalar(1, 0), Scalar(-1, 0)});
  CHECK_THROWS_AS(herm_frac_pow(indef, Rational(1, 2)), Error);

  // Even denominator / negative exponent need strictly positive spectrum.
  Matrix psd = Matrix::diagonal({Scalar(1, 0), Scalar(0, 0)});
  CHECK_THROWS_AS(herm_frac_pow(psd, Rational(-1, 1)), Error);
  CHECK_THROWS_AS(herm_frac_pow(psd, Rational(1, 2)), Error);
  CHECK_NOTHROW(herm_frac_pow(psd, Rational(1, 3)));
}

TEST_CASE("herm_frac_pow cube-root round trip") {
  Rng rng(7);
  for (int n : {2, 3, 5}) {
    Matrix a = random_pd(n, rng);
    Matrix back = herm_frac_pow(mat_int_pow(a, 3), Rational(1, 3));
    CHECK(rel_residual(back, a) < 1e-8);
  }
}

TEST_CASE("herm_frac_pow exponent semigroup on PD inputs") {
  Rng rng(11);
  Matrix a = random_pd(4, rng);
  for (auto [p, q] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1, 2), Rational(1, 2)},
           {Rational(1, 3), Rational(2, 3)},
           {Rational(-1, 2), Rational(3, 2)},
       }) {
    Matrix lhs = herm_frac_pow(a, p) * herm_frac_pow(a, q);
    Matrix rhs = herm_frac_pow(a, p + q);
    CHECK(rel_residual(lhs, rhs) < 1e-8);
  }
}

TEST_CASE("power_series_coeffs commuting binomial check") {
  Matrix b = Matrix::diagonal({Scalar(0.3, 0), Scalar(-1.2, 0), Scalar(2.0, 0)});
  for (int k = -3; k <= 5; ++k) {
    if (k == 0 && false) continue;
    auto coeffs = power_series_coeffs(Matrix::identity(3), b, k, 4);
    for (int r = 0; r <= 4; ++r) {
      Matrix expect = Scalar(binom(k, r), 0) * mat_int_pow(b, r);
      CHECK(rel_residual(coeffs[static_cast<size_t>(r)], expect) < 1e-12);
    }
  }
}

TEST_CASE("power_series_coeffs forced low-order terms") {
  Rng rng(3);
  Matrix b = random_square(3, rng);

  auto c2 = power_series_coeffs(Matrix::identity(3), b, 2, 2);
  CHECK(rel_residual(c2[0], Matrix::identity(3)) < 1e-15);
  CHECK(rel_residual(c2[1], Scalar(2, 0) * b) < 1e-15);
  CHECK(rel_residual(c2[2], b * b) < 1e-15);

  auto cm1 = power_series_coeffs(Matrix::identity(3), b, -1, 2);
  CHECK(rel_residual(cm1[2], b * b) < 1e-12);

  Matrix m0 = random_square(3, rng) + Scalar(3, 0) * Matrix::identity(3);
  Matrix m1 = random_square(3, rng);
  auto cg = power_series_coeffs(m0, m1, 2, 2);
  CHECK(rel_residual(cg[1], m0 * m1 + m1 * m0) < 1e-12);

  Matrix sing{{Scalar(1, 0), Scalar(0, 0)}, {Scalar(0, 0), Scalar(0, 0)}};
  CHECK_THROWS_AS(power_series_coeffs(sing, sing, -2, 2), Error);
  CHECK_THROWS_AS(power_series_coeffs(m0, m1, 2, 9), Error);
}

TEST_CASE("frobenius inner product") {
  CHECK(std::abs(frobenius_inner(Matrix::identity(2), Matrix::identity(2)) - Scalar(2, 0)) <
        1e-15);
  CHECK(std::abs(frobenius_inner(Matrix::unit(2, 0, 0), Matrix::unit(2, 1, 1))) < 1e-15);

  Rng rng(5);
  Matrix a = random_square(3, rng);
  Matrix b = random_square(3, rng);
  CHECK(std::abs(frobenius_inner(a, b) - std::conj(frobenius_inner(b, a))) < 1e-12);
  Scalar self = frobenius_inner(a, a);
  CHECK(std::abs(self.imag()) < 1e-12);
  double direct = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) direct += std::norm(a(i, j));
  CHECK(std::abs(self.real() - direct) < 1e-12);
}

TEST_CASE("nullspace_min_singular") {
  Matrix m{{Scalar(1, 0), Scalar(0, 0)}, {Scalar(0, 0), Scalar(0, 0)}};
  auto ns = nullspace_min_singular(m);
  CHECK(ns.sigma_min < 1e-15);
  CHECK(std::abs(ns.gap - 1.0) < 1e-12);
  CHECK(std::abs(ns.vector(1, 0)) > 0.999);

  auto id = nullspace_min_singular(Matrix::identity(3));
  CHECK(std::abs(id.sigma_min - 1.0) < 1e-12);
  CHECK(id.gap < 1e-12);

  Rng rng(9);
  Matrix u(4, 1), v(1, 4);
  for (int i = 0; i < 4; ++i) {
    u(i, 0) = rng.normal_complex();
    v(0, i) = rng.normal_complex();
  }
  auto outer = nullspace_min_singular(u * v);
  CHECK(outer.sigma_min <= 1e-12);
}

TEST_CASE("rational arithmetic") {
  Rational r(2, 4);
  CHECK(r.num == 1);
  CHECK(r.den == 2);
  CHECK(Rational(1, 3).inverse() == Rational(3, 1));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, 2).denominator_even());
  CHECK_FALSE(Rational(2, 3).denominator_even());
  CHECK_THROWS_AS(Rational(1, 0), Error);
}
