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

#ifndef KPRES_LINEAR_MAP_HPP
#define KPRES_LINEAR_MAP_HPP

#include <functional>
#include <utility>

#include "kpres/spaces.hpp"

namespace kpres {

/// Linear operator between spaces, stored as its coordinate matrix in the
/// deterministic bases (dim(codomain) x dim(domain)). Coordinates of maps on
/// real-scalar spaces are real.
struct LinearMap {
  Space domain;
  Space codomain;
  Matrix coord;
};

using MatrixRule = std::function<Matrix(const Matrix&)>;

inline LinearMap identity_map(const Space& space) {
  return LinearMap{space, space, Matrix::identity(space.dim())};
}

inline LinearMap zero_map(const Space& space) {
  return LinearMap{space, space, Matrix::zero(space.dim(), space.dim())};
}

inline bool map_is_zero(const LinearMap& m, const ToleranceConfig& tol = {}) {
  return m.coord.max_abs() <= tol.abs_tol;
}

/// Decompose in the domain basis, push through the coordinate matrix,
/// recompose in the codomain basis. Membership is checked against the span
/// for cones (a linear map only sees the span).
inline Matrix apply(const LinearMap& map, const Matrix& a, const ToleranceConfig& tol = {}) {
  ToleranceConfig loose = tol;
  loose.rel_tol = 10.0 * tol.rel_tol;
  require(contains(map.domain.span(), a, loose), ErrorCode::NotInDomain,
          "argument not in the map's domain");
  Matrix c = coordinates(map.domain, a);
  return reconstruct(map.codomain, map.coord * c);
}

/// Build the coordinate matrix of a rule by evaluating it on the basis.
/// The rule is spot-checked for linearity on random pairs.
inline LinearMap from_rule(const MatrixRule& rule, const Space& domain, const Space& codomain,
                           const ToleranceConfig& tol = {}) {
  SpaceBasis db = basis(domain);
  const bool real_scalars = codomain.scalar_field == FieldTag::Real;
  Matrix coord(codomain.dim(), domain.dim());
  for (size_t j = 0; j < db.elements.size(); ++j) {
    Matrix img = rule(db.elements[j]);
    ToleranceConfig loose = tol;
    loose.rel_tol = 10.0 * tol.rel_tol;
    require(contains(codomain.span(), img, loose), ErrorCode::NotInCodomain,
            "rule image leaves the codomain");
    Matrix c = coordinates(codomain, img);
    for (int i = 0; i < codomain.dim(); ++i) coord(i, static_cast<int>(j)) = c(i, 0);
  }
  // Linearity spot check on a fixed stream so construction is deterministic.
  Rng probe(0xC0FFEEULL);
  Space span = domain.span();
  for (int t = 0; t < 3; ++t) {
    Matrix a = sample(span, probe);
    Matrix b = sample(span, probe);
    Scalar alpha, beta;
    if (domain.scalar_field == FieldTag::Real) {
      alpha = Scalar(probe.normal(), 0.0);
      beta = Scalar(probe.normal(), 0.0);
    } else {
      alpha = probe.normal_complex();
      beta = probe.normal_complex();
    }
    Matrix lhs = rule(alpha * a + beta * b);
    Matrix rhs = alpha * rule(a) + beta * rule(b);
    double gate = std::max(1e-8, 10.0 * tol.rel_tol) *
                      std::max({1.0, lhs.frobenius_norm(), rhs.frobenius_norm()}) +
                  tol.abs_tol;
    require((lhs - rhs).frobenius_norm() <= gate, ErrorCode::NotLinear,
            "rule failed the linearity spot check");
  }
  return LinearMap{domain, codomain, std::move(coord)};
}

/// f after g.
inline LinearMap compose(const LinearMap& f, const LinearMap& g) {
  require(g.codomain == f.domain, ErrorCode::ShapeMismatch,
          "compose needs codomain(g) = domain(f)");
  return LinearMap{g.domain, f.codomain, f.coord * g.coord};
}

inline int rank(const LinearMap& m, const ToleranceConfig& tol = {}) {
  return numeric_rank(m.coord, tol);
}

inline bool is_bijective(const LinearMap& m, const ToleranceConfig& tol = {}) {
  return m.domain.dim() == m.codomain.dim() && rank(m, tol) == m.domain.dim();
}

inline LinearMap scale_map(const LinearMap& m, Scalar s) {
  // Scaling a real-scalar map by a non-real factor would corrupt its
  // coordinate field.
  if (m.domain.scalar_field == FieldTag::Real)
    require(std::abs(s.imag()) <= 1e-12 * std::max(1.0, std::abs(s)), ErrorCode::BadArgument,
            "complex scale on a real-scalar map");
  return LinearMap{m.domain, m.codomain, s * m.coord};
}

inline double map_rel_residual(const LinearMap& a, const LinearMap& b) {
  return rel_residual(a.coord, b.coord);
}

inline bool maps_approx_equal(const LinearMap& a, const LinearMap& b,
                              const ToleranceConfig& tol = {}) {
  return a.domain == b.domain && a.codomain == b.codomain && approx_equal(a.coord, b.coord, tol);
}

}  // namespace kpres

#endif  // KPRES_LINEAR_MAP_HPP
