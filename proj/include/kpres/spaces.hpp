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

#ifndef KPRES_SPACES_HPP
#define KPRES_SPACES_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kpres/linalg.hpp"
#include "kpres/rng.hpp"

namespace kpres {

enum class FieldTag { Real, Complex };

inline const char* field_name(FieldTag f) { return f == FieldTag::Real ? "R" : "C"; }

enum class SpaceKind {
  Gen,          // all n x n matrices
  Herm,         // complex Hermitian matrices (a real vector space)
  Sym,          // symmetric matrices
  PosDef,       // positive definite cone; spans Herm (complex) or Sym (real)
  Diag,         // diagonal matrices
  UpperTri,     // upper triangular matrices
  StrictUpper,  // strictly upper triangular matrices
  Subspace,     // explicit subspace given by an orthonormal basis
};

inline const char* kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Gen: return "gen";
    case SpaceKind::Herm: return "herm";
    case SpaceKind::Sym: return "sym";
    case SpaceKind::PosDef: return "posdef";
    case SpaceKind::Diag: return "diag";
    case SpaceKind::UpperTri: return "upper_tri";
    case SpaceKind::StrictUpper: return "strict_upper";
    case SpaceKind::Subspace: return "subspace";
  }
  return "?";
}

/// Descriptor of a matrix space or cone: entry field, size, and the field of
/// admissible linear-combination coefficients. Hermitian matrices form a real
/// vector space even though their entries are complex.
class Space {
 public:
  SpaceKind kind = SpaceKind::Gen;
  FieldTag field = FieldTag::Complex;
  int n = 1;
  FieldTag scalar_field = FieldTag::Complex;

  static Space gen(FieldTag f, int n) { return Space(SpaceKind::Gen, f, n, f); }
  static Space herm(int n) {
    return Space(SpaceKind::Herm, FieldTag::Complex, n, FieldTag::Real);
  }
  static Space sym(FieldTag f, int n) { return Space(SpaceKind::Sym, f, n, f); }
  static Space posdef(FieldTag f, int n) {
    return Space(SpaceKind::PosDef, f, n, FieldTag::Real);
  }
  static Space diag(FieldTag f, int n) { return Space(SpaceKind::Diag, f, n, f); }
  static Space upper_tri(FieldTag f, int n) { return Space(SpaceKind::UpperTri, f, n, f); }
  static Space strict_upper(FieldTag f, int n) {
    return Space(SpaceKind::StrictUpper, f, n, f);
  }
  /// Explicit subspace with a caller-supplied Frobenius-orthonormal basis.
  static Space subspace(std::string name, FieldTag scalar, int n, std::vector<Matrix> onb) {
    require(!onb.empty(), ErrorCode::BadArgument, "subspace needs a basis");
    for (const auto& b : onb)
      require(b.rows() == n && b.cols() == n, ErrorCode::ShapeMismatch,
              "subspace basis element of wrong size");
    Space s(SpaceKind::Subspace, scalar, n, scalar);
    s.custom_basis_ = std::make_shared<const std::vector<Matrix>>(std::move(onb));
    s.custom_name_ = std::move(name);
    return s;
  }

  int dim() const {
    switch (kind) {
      case SpaceKind::Gen: return n * n;
      case SpaceKind::Herm: return n * n;
      case SpaceKind::Sym: return n * (n + 1) / 2;
      case SpaceKind::PosDef:
        return field == FieldTag::Complex ? n * n : n * (n + 1) / 2;
      case SpaceKind::Diag: return n;
      case SpaceKind::UpperTri: return n * (n + 1) / 2;
      case SpaceKind::StrictUpper: return n * (n - 1) / 2;
      case SpaceKind::Subspace: return static_cast<int>(custom_basis_->size());
    }
    return 0;
  }

  bool is_cone() const { return kind == SpaceKind::PosDef; }

  /// The linear span: identity for vector spaces, Herm/Sym for the cone.
  Space span() const {
    if (kind != SpaceKind::PosDef) return *this;
    return field == FieldTag::Complex ? herm(n) : sym(FieldTag::Real, n);
  }

  bool star_closed() const;

  std::string name() const {
    if (kind == SpaceKind::Subspace)
      return custom_name_ + "(" + field_name(scalar_field) + "," + std::to_string(n) + ")";
    return std::string(kind_name(kind)) + "(" + field_name(field) + "," + std::to_string(n) +
           ")";
  }

  bool operator==(const Space& o) const {
    return kind == o.kind && field == o.field && n == o.n && scalar_field == o.scalar_field &&
           custom_basis_ == o.custom_basis_;
  }
  bool operator!=(const Space& o) const { return !(*this == o); }

  const std::vector<Matrix>* custom_basis() const {
    return custom_basis_ ? custom_basis_.get() : nullptr;
  }

 private:
  Space(SpaceKind k, FieldTag f, int nn, FieldTag sf) : kind(k), field(f), n(nn), scalar_field(sf) {
    require(nn >= 1, ErrorCode::BadArgument, "space size must be positive");
    require(!(k == SpaceKind::Herm && f == FieldTag::Real), ErrorCode::UnsupportedSpace,
            "real Hermitian space is sym(R,n)");
  }

  std::shared_ptr<const std::vector<Matrix>> custom_basis_;
  std::string custom_name_;
};

struct SpaceBasis {
  Space space;
  std::vector<Matrix> elements;
  /// Set when the basis spans the cone's ambient space rather than the cone.
  bool span_of_cone = false;
};

/// Deterministic Frobenius-orthonormal basis. For the cone this is the basis
/// of its span, flagged accordingly.
inline SpaceBasis basis(const Space& space) {
  const int n = space.n;
  const Scalar one(1.0, 0.0);
  const Scalar iu(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  SpaceBasis out{space, {}, false};
  switch (space.kind) {
    case SpaceKind::Gen:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.elements.push_back(Matrix::unit(n, i, j));
      break;
    case SpaceKind::Herm: {
      for (int i = 0; i < n; ++i) out.elements.push_back(Matrix::unit(n, i, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Matrix s = (Matrix::unit(n, i, j) + Matrix::unit(n, j, i)) * Scalar(inv_sqrt2, 0.0);
          out.elements.push_back(s);
        }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Matrix a = (iu * Matrix::unit(n, i, j) - iu * Matrix::unit(n, j, i)) *
                     Scalar(inv_sqrt2, 0.0);
          out.elements.push_back(a);
        }
      break;
    }
    case SpaceKind::Sym: {
      for (int i = 0; i < n; ++i) out.elements.push_back(Matrix::unit(n, i, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          out.elements.push_back((Matrix::unit(n, i, j) + Matrix::unit(n, j, i)) *
                                 Scalar(inv_sqrt2, 0.0));
      break;
    }
    case SpaceKind::PosDef: {
      SpaceBasis span = basis(space.span());
      out.elements = std::move(span.elements);
      out.span_of_cone = true;
      break;
    }
    case SpaceKind::Diag:
      for (int i = 0; i < n; ++i) out.elements.push_back(Matrix::unit(n, i, i));
      break;
    case SpaceKind::UpperTri:
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.elements.push_back(Matrix::unit(n, i, j));
      break;
    case SpaceKind::StrictUpper:
      require(n >= 2, ErrorCode::UnsupportedSpace, "strictly upper space needs n >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.elements.push_back(Matrix::unit(n, i, j));
      break;
    case SpaceKind::Subspace:
      out.elements = *space.custom_basis();
      break;
  }
  (void)one;
  return out;
}

/// Spanning family of rank-one idempotents. The off-diagonal families use the
/// normalization (E_ii + E_jj + d E_ij + conj(d) E_ji)/2 which squares to
/// itself; the real general case adds the golden-ratio family
/// w1 E_ii + w2 E_jj + E_ij - E_ji with w1, w2 the roots of x^2 - x - 1.
inline std::vector<Matrix> rank1_projection_basis(const Space& space) {
  const int n = space.n;
  std::vector<Matrix> fam;
  auto pair_elt = [&](int i, int j, Scalar delta) {
    Matrix m = Matrix::unit(n, i, i) + Matrix::unit(n, j, j) + delta * Matrix::unit(n, i, j) +
               std::conj(delta) * Matrix::unit(n, j, i);
    return m * Scalar(0.5, 0.0);
  };
  switch (space.kind) {
    case SpaceKind::Gen:
      for (int i = 0; i < n; ++i) fam.push_back(Matrix::unit(n, i, i));
      if (space.field == FieldTag::Complex) {
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            fam.push_back(pair_elt(i, j, Scalar(1.0, 0.0)));
            fam.push_back(pair_elt(i, j, Scalar(0.0, 1.0)));
          }
      } else {
        const double w1 = (1.0 + std::sqrt(5.0)) / 2.0;
        const double w2 = (1.0 - std::sqrt(5.0)) / 2.0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) fam.push_back(pair_elt(i, j, Scalar(1.0, 0.0)));
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            Matrix m = Scalar(w1, 0.0) * Matrix::unit(n, i, i) +
                       Scalar(w2, 0.0) * Matrix::unit(n, j, j) + Matrix::unit(n, i, j) -
                       Matrix::unit(n, j, i);
            fam.push_back(m);
          }
      }
      break;
    case SpaceKind::Herm:
      for (int i = 0; i < n; ++i) fam.push_back(Matrix::unit(n, i, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) fam.push_back(pair_elt(i, j, Scalar(1.0, 0.0)));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) fam.push_back(pair_elt(i, j, Scalar(0.0, 1.0)));
      break;
    case SpaceKind::Sym:
      for (int i = 0; i < n; ++i) fam.push_back(Matrix::unit(n, i, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) fam.push_back(pair_elt(i, j, Scalar(1.0, 0.0)));
      break;
    default:
      fail(ErrorCode::UnsupportedSpace,
           "projection basis defined for gen, herm and sym only");
  }
  return fam;
}

/// Orthogonal projection onto the space w.r.t. the Frobenius inner product
/// over the space's scalar field.
inline Matrix project(const Space& space, const Matrix& a) {
  require(a.rows() == space.n && a.cols() == space.n, ErrorCode::ShapeMismatch,
          "projection input of wrong size");
  const bool real_entries = space.field == FieldTag::Real;
  Matrix out(space.n, space.n);
  switch (space.kind) {
    case SpaceKind::Gen:
      out = real_entries ? a.real_part() : a;
      break;
    case SpaceKind::Herm:
      out = (a + a.adjoint()) * Scalar(0.5, 0.0);
      break;
    case SpaceKind::Sym:
      out = (a + a.transpose()) * Scalar(0.5, 0.0);
      if (real_entries) out = out.real_part();
      break;
    case SpaceKind::Diag:
      for (int i = 0; i < space.n; ++i)
        out(i, i) = real_entries ? Scalar(a(i, i).real(), 0.0) : a(i, i);
      break;
    case SpaceKind::UpperTri:
      for (int i = 0; i < space.n; ++i)
        for (int j = i; j < space.n; ++j)
          out(i, j) = real_entries ? Scalar(a(i, j).real(), 0.0) : a(i, j);
      break;
    case SpaceKind::StrictUpper:
      for (int i = 0; i < space.n; ++i)
        for (int j = i + 1; j < space.n; ++j)
          out(i, j) = real_entries ? Scalar(a(i, j).real(), 0.0) : a(i, j);
      break;
    case SpaceKind::Subspace: {
      const bool real_scalars = space.scalar_field == FieldTag::Real;
      for (const auto& b : *space.custom_basis()) {
        Scalar c = frobenius_inner(b, a);
        if (real_scalars) c = Scalar(c.real(), 0.0);
        out += c * b;
      }
      break;
    }
    case SpaceKind::PosDef:
      fail(ErrorCode::UnsupportedSpace, "no orthogonal projection onto a cone");
  }
  return out;
}

/// Membership test: distance to the space within tolerance; the cone
/// additionally requires min eigenvalue > abs_tol.
inline bool contains(const Space& space, const Matrix& a, const ToleranceConfig& tol = {}) {
  require(a.rows() == space.n && a.cols() == space.n, ErrorCode::ShapeMismatch,
          "membership test input of wrong size");
  double allowance = tol.rel_tol * std::max(1.0, a.frobenius_norm()) + tol.abs_tol;
  if (space.kind == SpaceKind::PosDef) {
    Matrix h = (a + a.adjoint()) * Scalar(0.5, 0.0);
    if (space.field == FieldTag::Real) h = ((h + h.transpose()) * Scalar(0.5, 0.0)).real_part();
    if ((a - h).frobenius_norm() > allowance) return false;
    auto eig = hermitian_eig(h);
    return eig.values.front() > tol.abs_tol;
  }
  return (a - project(space, a)).frobenius_norm() <= allowance;
}

/// Coordinates of A in the space's deterministic orthonormal basis
/// (a dim x 1 column over the scalar field). The cone uses its span basis.
inline Matrix coordinates(const Space& space, const Matrix& a) {
  SpaceBasis b = basis(space);
  const bool real_scalars = space.scalar_field == FieldTag::Real;
  Matrix c(static_cast<int>(b.elements.size()), 1);
  for (size_t i = 0; i < b.elements.size(); ++i) {
    Scalar v = frobenius_inner(b.elements[i], a);
    c(static_cast<int>(i), 0) = real_scalars ? Scalar(v.real(), 0.0) : v;
  }
  return c;
}

inline Matrix reconstruct(const Space& space, const Matrix& coords) {
  SpaceBasis b = basis(space);
  require(coords.rows() == static_cast<int>(b.elements.size()) && coords.cols() == 1,
          ErrorCode::ShapeMismatch, "coordinate vector of wrong length");
  Matrix out(space.n, space.n);
  for (size_t i = 0; i < b.elements.size(); ++i)
    out += coords(static_cast<int>(i), 0) * b.elements[i];
  return out;
}

inline bool Space::star_closed() const {
  switch (kind) {
    case SpaceKind::Gen:
    case SpaceKind::Herm:
    case SpaceKind::Sym:
    case SpaceKind::Diag:
    case SpaceKind::PosDef:
      return true;
    case SpaceKind::UpperTri:
    case SpaceKind::StrictUpper:
      return n == 1 && kind == SpaceKind::UpperTri;
    case SpaceKind::Subspace: {
      ToleranceConfig tol;
      for (const auto& b : *custom_basis_)
        if (!contains(*this, b.adjoint(), tol)) return false;
      return true;
    }
  }
  return false;
}

/// Random element with i.i.d. standard-normal coordinates; the cone samples
/// G*G + abs_tol I.
inline Matrix sample(const Space& space, Rng& rng) {
  if (space.kind == SpaceKind::PosDef) {
    Matrix g = sample(Space::gen(space.field, space.n), rng);
    ToleranceConfig tol;
    return g.adjoint() * g + Scalar(tol.abs_tol, 0.0) * Matrix::identity(space.n);
  }
  SpaceBasis b = basis(space);
  Matrix out(space.n, space.n);
  const bool real_scalars = space.scalar_field == FieldTag::Real;
  for (const auto& e : b.elements) {
    Scalar c = real_scalars ? Scalar(rng.normal(), 0.0) : rng.normal_complex();
    out += c * e;
  }
  return out;
}

/// I + x E with E a unit-Frobenius sample and |x| <= radius <= 0.5, hence
/// invertible with smallest singular value at least 1 - radius.
inline Matrix sample_near_identity(const Space& space, double radius, Rng& rng) {
  require(radius > 0.0 && radius <= 0.5, ErrorCode::BadArgument,
          "near-identity radius must lie in (0, 0.5]");
  require(space.kind != SpaceKind::StrictUpper, ErrorCode::UnsupportedSpace,
          "identity is not strictly upper triangular");
  Matrix I = Matrix::identity(space.n);
  if (space.kind == SpaceKind::Subspace)
    require(contains(space, I), ErrorCode::UnsupportedSpace,
            "subspace does not contain the identity");
  Space sampling = space.span();
  Matrix e = sample(sampling, rng);
  double norm = e.frobenius_norm();
  while (norm < 1e-8) {
    e = sample(sampling, rng);
    norm = e.frobenius_norm();
  }
  double x = radius * (0.1 + 0.9 * rng.uniform());
  return I + Scalar(x / norm, 0.0) * e;
}

/// Rejection-sample until the condition number is below 1e6.
inline Matrix sample_invertible(const Space& space, Rng& rng) {
  require(space.kind != SpaceKind::StrictUpper, ErrorCode::UnsupportedSpace,
          "strictly upper triangular matrices are singular");
  for (int attempt = 0; attempt < 200; ++attempt) {
    Matrix a = sample(space, rng);
    if (a.square() && cond_number(a) < 1e6) return a;
  }
  fail(ErrorCode::SingularMatrix, "could not sample an invertible element");
}

}  // namespace kpres

#endif  // KPRES_SPACES_HPP
