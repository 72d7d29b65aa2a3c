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

#include "kpres/spaces.hpp"

using namespace kpres;

namespace {

std::vector<Space> all_vector_spaces(int n) {
  std::vector<Space> out = {
      Space::gen(FieldTag::Complex, n), Space::gen(FieldTag::Real, n),
      Space::herm(n),                   Space::sym(FieldTag::Complex, n),
      Space::sym(FieldTag::Real, n),    Space::diag(FieldTag::Complex, n),
      Space::diag(FieldTag::Real, n),   Space::upper_tri(FieldTag::Complex, n),
      Space::upper_tri(FieldTag::Real, n)};
  if (n >= 2) {
    out.push_back(Space::strict_upper(FieldTag::Complex, n));
    out.push_back(Space::strict_upper(FieldTag::Real, n));
  }
  return out;
}

int expected_dim(const Space& s) {
  switch (s.kind) {
    case SpaceKind::Gen:
    case SpaceKind::Herm: return s.n * s.n;
    case SpaceKind::Sym:
    case SpaceKind::UpperTri: return s.n * (s.n + 1) / 2;
    case SpaceKind::Diag: return s.n;
    case SpaceKind::StrictUpper: return s.n * (s.n - 1) / 2;
    case SpaceKind::PosDef:
      return s.field == FieldTag::Complex ? s.n * s.n : s.n * (s.n + 1) / 2;
    default: return -1;
  }
}

}  // namespace

TEST_CASE("basis length matches the dimension formula for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : all_vector_spaces(n)) {
      CAPTURE(s.name());
      CHECK(static_cast<int>(basis(s).elements.size()) == expected_dim(s));
      CHECK(s.dim() == expected_dim(s));
    }
    for (FieldTag f : {FieldTag::Real, FieldTag::Complex}) {
      Space p = Space::posdef(f, n);
      SpaceBasis b = basis(p);
      CHECK(b.span_of_cone);
      CHECK(static_cast<int>(b.elements.size()) == expected_dim(p));
    }
  }
}

TEST_CASE("bases are orthonormal and live in their space") {
  ToleranceConfig tol;
  for (int n : {1, 2, 4}) {
    for (const auto& s : all_vector_spaces(n)) {
      CAPTURE(s.name());
      SpaceBasis b = basis(s);
      for (size_t i = 0; i < b.elements.size(); ++i) {
        CHECK(contains(s, b.elements[i], tol));
        for (size_t j = 0; j < b.elements.size(); ++j) {
          Scalar g = frobenius_inner(b.elements[i], b.elements[j]);
          CHECK(std::abs(g - (i == j ? Scalar(1, 0) : Scalar(0, 0))) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("herm basis at n=2 is the Pauli-like quadruple") {
  SpaceBasis b = basis(Space::herm(2));
  REQUIRE(b.elements.size() == 4);
  for (const auto& e : b.elements) CHECK((e - e.adjoint()).frobenius_norm() < 1e-15);
}

TEST_CASE("rank-one projection families") {
  for (int n : {1, 2, 3, 4}) {
    for (const Space& s :
         {Space::gen(FieldTag::Complex, n), Space::sym(FieldTag::Complex, n),
          Space::sym(FieldTag::Real, n), Space::herm(n)}) {
      CAPTURE(s.name());
      auto fam = rank1_projection_basis(s);
      CHECK(static_cast<int>(fam.size()) == s.dim());
      for (const auto& c : fam) CHECK((c * c - c).frobenius_norm() < 1e-12);
      // Independence: stack coordinates and check full rank.
      Matrix coords(s.dim(), static_cast<int>(fam.size()));
      for (size_t j = 0; j < fam.size(); ++j) {
        Matrix col = coordinates(s, fam[j]);
        for (int i = 0; i < s.dim(); ++i) coords(i, static_cast<int>(j)) = col(i, 0);
      }
      CHECK(numeric_rank(coords) == s.dim());
    }
  }
  CHECK(rank1_projection_basis(Space::gen(FieldTag::Complex, 1)).size() == 1);
  CHECK_THROWS_AS(rank1_projection_basis(Space::diag(FieldTag::Complex, 2)), Error);
}

TEST_CASE("real gen projection family spans and stays idempotent") {
  for (int n : {2, 3}) {
    Space s = Space::gen(FieldTag::Real, n);
    auto fam = rank1_projection_basis(s);
    CHECK(static_cast<int>(fam.size()) == n * n);
    Matrix coords(s.dim(), static_cast<int>(fam.size()));
    for (size_t j = 0; j < fam.size(); ++j) {
      Matrix col = coordinates(s, fam[j]);
      for (int i = 0; i < s.dim(); ++i) coords(i, static_cast<int>(j)) = col(i, 0);
    }
    CHECK(numeric_rank(coords) == s.dim());
    // The golden-ratio family is idempotent because w^2 = w + 1.
    for (const auto& c : fam) CHECK((c * c - c).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("contains") {
  ToleranceConfig tol;
  Scalar iu(0, 1);
  Matrix h = Matrix::identity(2) + iu * Matrix::unit(2, 0, 1) - iu * Matrix::unit(2, 1, 0);
  CHECK(contains(Space::herm(2), h, tol));
  CHECK_FALSE(contains(Space::posdef(FieldTag::Complex, 2),
                       Matrix::diagonal({Scalar(1, 0), Scalar(-1, 0)}), tol));
  CHECK(contains(Space::posdef(FieldTag::Complex, 2),
                 Matrix::diagonal({Scalar(1, 0), Scalar(2, 0)}), tol));

  Rng rng(21);
  Matrix lower(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) lower(i, j) = rng.normal_complex();
  lower(2, 0) += Scalar(1.0, 0.0);  // guarantee a nonzero lower entry
  CHECK_FALSE(contains(Space::upper_tri(FieldTag::Complex, 3), lower, tol));
  CHECK_FALSE(contains(Space::gen(FieldTag::Real, 2), iu * Matrix::identity(2), tol));
}

TEST_CASE("project") {
  Rng rng(33);
  Matrix a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = rng.normal_complex();

  Matrix sym = project(Space::sym(FieldTag::Complex, 3), a);
  CHECK(rel_residual(sym, (a + a.transpose()) * Scalar(0.5, 0)) < 1e-15);

  Matrix dg = project(Space::diag(FieldTag::Complex, 3), a);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(dg(i, i) - a(i, i)) < 1e-15);
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(std::abs(dg(i, j)) < 1e-15);
  }

  for (const auto& s : all_vector_spaces(3)) {
    CAPTURE(s.name());
    Matrix p1 = project(s, a);
    CHECK(rel_residual(project(s, p1), p1) < 1e-13);
    CHECK(contains(s, p1));
  }
  CHECK_THROWS_AS(project(Space::posdef(FieldTag::Complex, 2), Matrix::identity(2)), Error);
}

TEST_CASE("project is self-adjoint for the scalar-field pairing") {
  Rng rng(55);
  for (const auto& s : all_vector_spaces(3)) {
    CAPTURE(s.name());
    Matrix a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a(i, j) = rng.normal_complex();
        b(i, j) = rng.normal_complex();
      }
    Scalar lhs = frobenius_inner(project(s, a), b);
    Scalar rhs = frobenius_inner(a, project(s, b));
    if (s.scalar_field == FieldTag::Real)
      CHECK(std::abs(lhs.real() - rhs.real()) < 1e-12);
    else
      CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("samplers") {
  Rng rng(77);
  Matrix d = sample_near_identity(Space::diag(FieldTag::Complex, 4), 0.05, rng);
  CHECK((d - Matrix::identity(4)).frobenius_norm() <= 0.05 + 1e-12);
  CHECK(contains(Space::diag(FieldTag::Complex, 4), d));

  for (const auto& s : all_vector_spaces(4)) {
    if (s.kind == SpaceKind::StrictUpper) continue;
    CAPTURE(s.name());
    Matrix a = sample_near_identity(s, 0.3, rng);
    auto sv = singular_values(a);
    CHECK(sv.back() >= 1.0 - 0.3 - 1e-12);
  }

  Matrix p = sample(Space::posdef(FieldTag::Complex, 3), rng);
  CHECK(contains(Space::posdef(FieldTag::Complex, 3), p));
  auto eig = hermitian_eig(p);
  CHECK(eig.values.front() > 0.0);

  Matrix hm = sample(Space::herm(3), rng);
  CHECK((hm - hm.adjoint()).frobenius_norm() < 1e-13);

  Matrix inv = sample_invertible(Space::gen(FieldTag::Real, 3), rng);
  CHECK(cond_number(inv) < 1e6);
  CHECK(inv.max_imag_abs() < 1e-15);

  CHECK_THROWS_AS(sample_near_identity(Space::strict_upper(FieldTag::Complex, 3), 0.05, rng),
                  Error);
  CHECK_THROWS_AS(sample_near_identity(Space::gen(FieldTag::Complex, 3), 0.7, rng), Error);
}

TEST_CASE("subspace spaces") {
  // Two-block subspace of gen(4).
  std::vector<Matrix> onb;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) onb.push_back(Matrix::unit(4, i, j));
  for (int i = 2; i < 4; ++i)
    for (int j = 2; j < 4; ++j) onb.push_back(Matrix::unit(4, i, j));
  Space w = Space::subspace("block", FieldTag::Complex, 4, onb);
  CHECK(w.dim() == 8);
  CHECK(w.star_closed());
  CHECK(contains(w, Matrix::identity(4)));
  CHECK_FALSE(contains(w, Matrix::unit(4, 0, 3)));
  Rng rng(5);
  Matrix s = sample_near_identity(w, 0.05, rng);
  CHECK(contains(w, s));
  Matrix off = Matrix::unit(4, 0, 2);
  CHECK(project(w, off).frobenius_norm() < 1e-15);
}

TEST_CASE("coordinates round trip") {
  Rng rng(101);
  for (const auto& s : all_vector_spaces(4)) {
    CAPTURE(s.name());
    Matrix a = sample(s, rng);
    Matrix back = reconstruct(s, coordinates(s, a));
    CHECK(rel_residual(back, a) < 1e-12);
  }
}
