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

#ifndef KPRES_CANONICAL_FORMS_HPP
#define KPRES_CANONICAL_FORMS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kpres/linear_map.hpp"
#include "kpres/powers.hpp"

namespace kpres {

// ---------------------------------------------------------------------------
// Canonical single-map families
// ---------------------------------------------------------------------------

/// A -> lambda P A P^{-1} (or with A^t) on the full matrix space.
struct Similarity {
  Scalar lambda{1.0, 0.0};
  Matrix P;
  bool transpose = false;
};

/// A -> sign U* A U (or with A^t) on Hermitian matrices / the PD cone.
struct UnitarySimilarity {
  Scalar sign{1.0, 0.0};
  Matrix U;
  bool transpose = false;
};

/// A -> lambda O A O^t on symmetric matrices, O orthogonal.
struct OrthCongruence {
  Scalar lambda{1.0, 0.0};
  Matrix O;
};

/// Diagonal selection form: row i of the output is C_i * a_{p(i)}, with
/// p(i) = 0 meaning the zero functional.
struct DiagSelection {
  std::vector<Scalar> C;
  std::vector<int> p;  // entries in 0..n
};

/// A -> lambda P A P^{-1} or lambda P A^- P^{-1} with P upper triangular and
/// A^- the flip along the anti-diagonal.
struct TriSimilarity {
  Scalar lambda{1.0, 0.0};
  Matrix P;
  bool flip = false;
};

struct ZeroMapForm {};

/// Tag used when a map is recognized as valid but outside the classified
/// families (reporting only; not constructible).
struct DegenerateForm {
  std::string description;
};

using CanonicalForm = std::variant<Similarity, UnitarySimilarity, OrthCongruence, DiagSelection,
                                   TriSimilarity, ZeroMapForm, DegenerateForm>;

// ---------------------------------------------------------------------------
// Canonical (phi, psi) pair families
// ---------------------------------------------------------------------------

/// phi = c^{-k} P . P^{-1}, psi = c P . P^{-1}; P is unitary on Herm/PosDef
/// and orthogonal on Sym.
struct SimilarityPair {
  Scalar c{1.0, 0.0};
  Matrix P;
  bool transpose = false;
};

/// k = -1 on the full space: phi(A) = P A Q, psi(B) = P B Q.
struct SandwichPair {
  Matrix P;
  Matrix Q;
  bool transpose = false;
};

/// k = -1 congruence: phi = psi = A -> c P* A P (Herm/PosDef) or c P A P^t (Sym).
struct CongruencePair {
  Scalar c{1.0, 0.0};
  Matrix P;
  bool transpose = false;
};

/// Diagonal pair phi(A) = P C^{-k} A P^{-1}, psi(B) = P C B P^{-1} with P the
/// permutation j -> perm[j] (1-based) and C invertible diagonal.
struct DiagPair {
  std::vector<Scalar> C;
  std::vector<int> perm;
};

/// Nonlinear PD-cone pair phi(A) = (P* A^c P)^{1/a}, psi(B) = (P^{-1} B^d P^{-*})^{1/b}.
struct WeightedPair {
  Matrix P;
  Rational a{1}, b{1}, c{1}, d{1};
  bool transpose = false;
};

using PairForm = std::variant<SimilarityPair, SandwichPair, CongruencePair, DiagPair, WeightedPair>;

// ---------------------------------------------------------------------------
// Gauge normalization
// ---------------------------------------------------------------------------

enum class GaugeFreedom { FullScalar, Phase, Sign };

namespace detail {

inline std::pair<int, int> leading_entry(const Matrix& p) {
  double cut = 1e-8 * std::max(1e-300, p.max_abs());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      if (std::abs(p(i, j)) > cut) return {i, j};
  return {0, 0};
}

}  // namespace detail

/// Deterministic representative of a matrix defined up to a scalar:
/// ||P||_F = sqrt(n) (full-scalar freedom only) and the first row-major
/// nonzero entry rotated to the positive real axis, or to the best sign when
/// only +-1 is available.
inline Matrix normalize_gauge(const Matrix& p, GaugeFreedom freedom) {
  Matrix out = p;
  if (freedom == GaugeFreedom::FullScalar) {
    double norm = out.frobenius_norm();
    require(norm > 0.0, ErrorCode::BadArgument, "cannot normalize the zero matrix");
    out *= Scalar(std::sqrt(static_cast<double>(out.rows())) / norm, 0.0);
  }
  auto [i, j] = detail::leading_entry(out);
  Scalar lead = out(i, j);
  double mag = std::abs(lead);
  if (mag == 0.0) return out;
  if (freedom == GaugeFreedom::Sign) {
    if (std::abs(lead.real()) > 1e-9 * mag) {
      if (lead.real() < 0.0) out *= Scalar(-1.0, 0.0);
    } else if (lead.imag() < 0.0) {
      out *= Scalar(-1.0, 0.0);
    }
  } else {
    out *= std::conj(lead) / mag;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation helpers
// ---------------------------------------------------------------------------

namespace detail {

inline void require_real(Scalar z, const std::string& what) {
  require(std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z)), ErrorCode::FormSpaceMismatch,
          what + " must be real for this space");
}

inline void require_real_matrix(const Matrix& m, const std::string& what) {
  require(m.max_imag_abs() <= 1e-9 * std::max(1.0, m.max_abs()), ErrorCode::FormSpaceMismatch,
          what + " must be real for this space");
}

inline void require_unit_root(Scalar lambda, int k, double rel_tol,
                              const std::string& what = "lambda") {
  require(std::abs(scalar_int_pow(lambda, k - 1) - Scalar(1.0, 0.0)) <= rel_tol,
          ErrorCode::NonUnitRootLambda, what + "^(k-1) != 1");
}

inline void require_invertible_param(const Matrix& p, const ToleranceConfig& tol) {
  require(p.square(), ErrorCode::ShapeMismatch, "form parameter must be square");
  require(cond_number(p) < 1.0 / tol.abs_tol, ErrorCode::SingularP,
          "form parameter numerically singular");
}

inline void require_unitary(const Matrix& u) {
  require(u.square(), ErrorCode::ShapeMismatch, "U must be square");
  double res = (u.adjoint() * u - Matrix::identity(u.rows())).frobenius_norm();
  require(res <= 1e-8 * std::sqrt(static_cast<double>(u.rows())), ErrorCode::FormSpaceMismatch,
          "U is not unitary");
}

inline void require_orthogonal(const Matrix& o) {
  require(o.square(), ErrorCode::ShapeMismatch, "O must be square");
  double res = (o * o.transpose() - Matrix::identity(o.rows())).frobenius_norm();
  require(res <= 1e-8 * std::sqrt(static_cast<double>(o.rows())), ErrorCode::FormSpaceMismatch,
          "O is not orthogonal");
}

inline Matrix clean_upper_triangular(const Matrix& p) {
  double lower = 0.0;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < i; ++j) lower += std::norm(p(i, j));
  require(std::sqrt(lower) <= 1e-8 * std::max(1.0, p.frobenius_norm()),
          ErrorCode::FormSpaceMismatch, "P must be upper triangular");
  Matrix out = p;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < i; ++j) out(i, j) = Scalar(0.0, 0.0);
  return out;
}

inline bool is_permutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)]) return false;
    seen[static_cast<size_t>(v - 1)] = true;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

/// Build the linear map induced by a canonical form on a space. When k is
/// given, the k-dependent invariants (unit roots, negative-power selection
/// constraints) are validated as well.
inline LinearMap make_canonical(const CanonicalForm& form, const Space& space,
                                std::optional<int> k = std::nullopt,
                                const ToleranceConfig& tol = {}) {
  const int n = space.n;
  if (std::holds_alternative<ZeroMapForm>(form)) return zero_map(space);
  if (std::holds_alternative<DegenerateForm>(form))
    fail(ErrorCode::FormSpaceMismatch, "degenerate tag cannot be constructed");

  if (const auto* s = std::get_if<Similarity>(&form)) {
    require(space.kind == SpaceKind::Gen, ErrorCode::FormSpaceMismatch,
            "similarity form lives on the full matrix space");
    require(s->P.rows() == n, ErrorCode::ShapeMismatch, "P size mismatch");
    detail::require_invertible_param(s->P, tol);
    if (space.field == FieldTag::Real) {
      detail::require_real_matrix(s->P, "P");
      detail::require_real(s->lambda, "lambda");
    }
    if (k) detail::require_unit_root(s->lambda, *k, tol.rel_tol);
    Matrix P = s->P;
    Matrix Pinv = inverse(P, tol);
    Scalar lam = s->lambda;
    bool tr = s->transpose;
    return from_rule(
        [P, Pinv, lam, tr](const Matrix& a) {
          return lam * (P * (tr ? a.transpose() : a) * Pinv);
        },
        space, space, tol);
  }

  if (const auto* u = std::get_if<UnitarySimilarity>(&form)) {
    require(space.kind == SpaceKind::Herm || space.kind == SpaceKind::PosDef,
            ErrorCode::FormSpaceMismatch,
            "unitary similarity lives on Hermitian matrices or the PD cone");
    require(u->U.rows() == n, ErrorCode::ShapeMismatch, "U size mismatch");
    detail::require_unitary(u->U);
    detail::require_real(u->sign, "sign");
    if (space.kind == SpaceKind::PosDef) {
      require(std::abs(u->sign - Scalar(1.0, 0.0)) <= 1e-9, ErrorCode::FormSpaceMismatch,
              "the PD cone admits only sign +1");
      if (space.field == FieldTag::Real) detail::require_real_matrix(u->U, "U");
    } else {
      require(std::abs(std::abs(u->sign.real()) - 1.0) <= 1e-9, ErrorCode::FormSpaceMismatch,
              "sign must be +1 or -1");
    }
    if (k) detail::require_unit_root(u->sign, *k, tol.rel_tol, "sign");
    Matrix U = u->U;
    Scalar sg = u->sign;
    bool tr = u->transpose;
    return from_rule(
        [U, sg, tr](const Matrix& a) { return sg * (U.adjoint() * (tr ? a.transpose() : a) * U); },
        space, space, tol);
  }

  if (const auto* o = std::get_if<OrthCongruence>(&form)) {
    require(space.kind == SpaceKind::Sym, ErrorCode::FormSpaceMismatch,
            "orthogonal congruence lives on symmetric matrices");
    require(o->O.rows() == n, ErrorCode::ShapeMismatch, "O size mismatch");
    detail::require_orthogonal(o->O);
    if (space.field == FieldTag::Real) {
      detail::require_real_matrix(o->O, "O");
      detail::require_real(o->lambda, "lambda");
    }
    if (k) detail::require_unit_root(o->lambda, *k, tol.rel_tol);
    Matrix O = o->O;
    Scalar lam = o->lambda;
    return from_rule([O, lam](const Matrix& a) { return lam * (O * a * O.transpose()); }, space,
                     space, tol);
  }

  if (const auto* d = std::get_if<DiagSelection>(&form)) {
    require(space.kind == SpaceKind::Diag, ErrorCode::FormSpaceMismatch,
            "selection form lives on diagonal matrices");
    require(static_cast<int>(d->C.size()) == n && static_cast<int>(d->p.size()) == n,
            ErrorCode::ShapeMismatch, "selection parameters must have length n");
    Matrix coord(n, n);
    for (int i = 0; i < n; ++i) {
      int pi = d->p[static_cast<size_t>(i)];
      require(pi >= 0 && pi <= n, ErrorCode::FormSpaceMismatch, "selection index out of range");
      Scalar ci = d->C[static_cast<size_t>(i)];
      bool zero_row = pi == 0 || std::abs(ci) <= tol.abs_tol;
      if (space.field == FieldTag::Real) detail::require_real(ci, "C");
      if (k) {
        if (*k < 0)
          require(!zero_row, ErrorCode::FormSpaceMismatch,
                  "negative powers need an everywhere-nonzero selection");
        if (!zero_row) detail::require_unit_root(ci, *k, tol.rel_tol, "C entry");
      }
      if (!zero_row) coord(i, pi - 1) = ci;
    }
    return LinearMap{space, space, coord};
  }

  if (const auto* t = std::get_if<TriSimilarity>(&form)) {
    require(space.kind == SpaceKind::UpperTri, ErrorCode::FormSpaceMismatch,
            "triangular similarity lives on upper triangular matrices");
    require(t->P.rows() == n, ErrorCode::ShapeMismatch, "P size mismatch");
    Matrix P = detail::clean_upper_triangular(t->P);
    detail::require_invertible_param(P, tol);
    if (space.field == FieldTag::Real) {
      detail::require_real_matrix(P, "P");
      detail::require_real(t->lambda, "lambda");
    }
    if (k) detail::require_unit_root(t->lambda, *k, tol.rel_tol);
    Matrix Pinv = inverse(P, tol);
    Scalar lam = t->lambda;
    bool flip = t->flip;
    return from_rule(
        [P, Pinv, lam, flip](const Matrix& a) {
          return lam * (P * (flip ? a.anti_transpose() : a) * Pinv);
        },
        space, space, tol);
  }

  fail(ErrorCode::FormSpaceMismatch, "unhandled canonical form");
}

/// Build the (phi, psi) pair induced by a pair form for exponent k.
inline std::pair<LinearMap, LinearMap> make_pair(const PairForm& form, const Space& space, int k,
                                                 const ToleranceConfig& tol = {}) {
  require(k != 0 && k != 1, ErrorCode::BadK, "pair exponent k must avoid {0,1}");
  const int n = space.n;

  if (const auto* sp = std::get_if<SimilarityPair>(&form)) {
    require(k != -1, ErrorCode::FormSpaceMismatch, "k = -1 uses sandwich/congruence pairs");
    require(std::abs(sp->c) > 0.0, ErrorCode::FormSpaceMismatch, "c must be nonzero");
    require(sp->P.rows() == n, ErrorCode::ShapeMismatch, "P size mismatch");
    Scalar c = sp->c;
    Matrix P = sp->P;
    bool tr = sp->transpose;
    Matrix Pinv;
    switch (space.kind) {
      case SpaceKind::Gen:
        detail::require_invertible_param(P, tol);
        if (space.field == FieldTag::Real) {
          detail::require_real_matrix(P, "P");
          detail::require_real(c, "c");
        }
        Pinv = inverse(P, tol);
        break;
      case SpaceKind::Herm:
        detail::require_unitary(P);
        detail::require_real(c, "c");
        Pinv = P.adjoint();
        break;
      case SpaceKind::Sym:
        detail::require_orthogonal(P);
        if (space.field == FieldTag::Real) {
          detail::require_real_matrix(P, "P");
          detail::require_real(c, "c");
        }
        Pinv = P.transpose();
        break;
      case SpaceKind::PosDef:
        detail::require_unitary(P);
        detail::require_real(c, "c");
        require(c.real() > 0.0, ErrorCode::FormSpaceMismatch, "the PD cone needs c > 0");
        if (space.field == FieldTag::Real) detail::require_real_matrix(P, "P");
        Pinv = P.adjoint();
        break;
      default:
        fail(ErrorCode::FormSpaceMismatch, "similarity pair unsupported on this space");
    }
    if (space.kind == SpaceKind::Sym) tr = false;  // transpose is trivial on symmetric matrices
    Scalar cmk = scalar_int_pow(c, -k);
    auto act = [P, Pinv, tr](const Matrix& a) { return P * (tr ? a.transpose() : a) * Pinv; };
    LinearMap phi = from_rule([act, cmk](const Matrix& a) { return cmk * act(a); }, space, space, tol);
    LinearMap psi = from_rule([act, c](const Matrix& b) { return c * act(b); }, space, space, tol);
    return {phi, psi};
  }

  if (const auto* sw = std::get_if<SandwichPair>(&form)) {
    require(space.kind == SpaceKind::Gen && k == -1, ErrorCode::FormSpaceMismatch,
            "sandwich pairs live on the full space at k = -1");
    require(sw->P.rows() == n && sw->Q.rows() == n, ErrorCode::ShapeMismatch, "P/Q size mismatch");
    detail::require_invertible_param(sw->P, tol);
    detail::require_invertible_param(sw->Q, tol);
    if (space.field == FieldTag::Real) {
      detail::require_real_matrix(sw->P, "P");
      detail::require_real_matrix(sw->Q, "Q");
    }
    Matrix P = sw->P, Q = sw->Q;
    bool tr = sw->transpose;
    auto act = [P, Q, tr](const Matrix& a) { return P * (tr ? a.transpose() : a) * Q; };
    LinearMap phi = from_rule(act, space, space, tol);
    return {phi, phi};
  }

  if (const auto* cg = std::get_if<CongruencePair>(&form)) {
    require(k == -1, ErrorCode::FormSpaceMismatch, "congruence pairs are the k = -1 family");
    require(cg->P.rows() == n, ErrorCode::ShapeMismatch, "P size mismatch");
    detail::require_invertible_param(cg->P, tol);
    Scalar c = cg->c;
    Matrix P = cg->P;
    bool tr = cg->transpose;
    MatrixRule act;
    switch (space.kind) {
      case SpaceKind::Herm:
        detail::require_real(c, "c");
        act = [P, c, tr](const Matrix& a) {
          return c * (P.adjoint() * (tr ? a.transpose() : a) * P);
        };
        break;
      case SpaceKind::PosDef:
        require(std::abs(c - Scalar(1.0, 0.0)) <= 1e-9, ErrorCode::FormSpaceMismatch,
                "the PD cone congruence has c = 1");
        if (space.field == FieldTag::Real) detail::require_real_matrix(P, "P");
        act = [P, tr](const Matrix& a) { return P.adjoint() * (tr ? a.transpose() : a) * P; };
        break;
      case SpaceKind::Sym:
        require(!tr, ErrorCode::FormSpaceMismatch, "transpose is trivial on symmetric matrices");
        if (space.field == FieldTag::Real) {
          detail::require_real_matrix(P, "P");
          detail::require_real(c, "c");
        }
        act = [P, c](const Matrix& a) { return c * (P * a * P.transpose()); };
        break;
      default:
        fail(ErrorCode::FormSpaceMismatch, "congruence pair unsupported on this space");
    }
    LinearMap phi = from_rule(act, space, space, tol);
    return {phi, phi};
  }

  if (const auto* dp = std::get_if<DiagPair>(&form)) {
    require(space.kind == SpaceKind::Diag, ErrorCode::FormSpaceMismatch,
            "diagonal pairs live on diagonal matrices");
    require(static_cast<int>(dp->C.size()) == n, ErrorCode::ShapeMismatch, "C must have length n");
    require(detail::is_permutation(dp->perm, n), ErrorCode::FormSpaceMismatch,
            "perm must be a permutation of 1..n");
    Matrix phi_coord(n, n), psi_coord(n, n);
    for (int j = 0; j < n; ++j) {
      Scalar cj = dp->C[static_cast<size_t>(j)];
      require(std::abs(cj) > tol.abs_tol, ErrorCode::SingularP, "C must be invertible");
      if (space.field == FieldTag::Real) detail::require_real(cj, "C");
      int i = dp->perm[static_cast<size_t>(j)] - 1;
      phi_coord(i, j) = scalar_int_pow(cj, -k);
      psi_coord(i, j) = cj;
    }
    return {LinearMap{space, space, phi_coord}, LinearMap{space, space, psi_coord}};
  }

  fail(ErrorCode::FormSpaceMismatch,
       "weighted pairs are nonlinear; build them with make_weighted_pair");
}

// ---------------------------------------------------------------------------
// Normalized representatives and comparison
// ---------------------------------------------------------------------------

inline GaugeFreedom pair_matrix_gauge(const Space& space) {
  switch (space.kind) {
    case SpaceKind::Gen: return GaugeFreedom::FullScalar;
    case SpaceKind::Herm:
    case SpaceKind::PosDef: return GaugeFreedom::Phase;
    case SpaceKind::Sym: return GaugeFreedom::Sign;
    default: return GaugeFreedom::FullScalar;
  }
}

inline CanonicalForm normalized(const CanonicalForm& form) {
  CanonicalForm out = form;
  if (auto* s = std::get_if<Similarity>(&out)) {
    s->P = normalize_gauge(s->P, GaugeFreedom::FullScalar);
  } else if (auto* u = std::get_if<UnitarySimilarity>(&out)) {
    u->U = normalize_gauge(u->U, GaugeFreedom::Phase);
    u->sign = Scalar(u->sign.real() >= 0.0 ? 1.0 : -1.0, 0.0);
  } else if (auto* o = std::get_if<OrthCongruence>(&out)) {
    o->O = normalize_gauge(o->O, GaugeFreedom::Sign);
  } else if (auto* d = std::get_if<DiagSelection>(&out)) {
    for (size_t i = 0; i < d->p.size(); ++i) {
      if (d->p[i] == 0) d->C[i] = Scalar(0.0, 0.0);
      if (std::abs(d->C[i]) <= 1e-12) {
        d->p[i] = 0;
        d->C[i] = Scalar(0.0, 0.0);
      }
    }
  } else if (auto* t = std::get_if<TriSimilarity>(&out)) {
    t->P = normalize_gauge(t->P, GaugeFreedom::FullScalar);
  }
  return out;
}

inline PairForm normalized_pair(const PairForm& form, const Space& space) {
  PairForm out = form;
  if (auto* sp = std::get_if<SimilarityPair>(&out)) {
    sp->P = normalize_gauge(sp->P, pair_matrix_gauge(space));
  } else if (auto* sw = std::get_if<SandwichPair>(&out)) {
    Matrix oldP = sw->P;
    sw->P = normalize_gauge(sw->P, GaugeFreedom::FullScalar);
    // Compensate Q so that P B Q is unchanged: Q <- z Q with z = old/new.
    auto [i, j] = detail::leading_entry(sw->P);
    Scalar z = oldP(i, j) / sw->P(i, j);
    sw->Q = z * sw->Q;
  } else if (auto* cg = std::get_if<CongruencePair>(&out)) {
    cg->P = normalize_gauge(cg->P, space.kind == SpaceKind::Sym ? GaugeFreedom::Sign
                                                                : GaugeFreedom::Phase);
    if (space.kind == SpaceKind::PosDef) cg->c = Scalar(1.0, 0.0);
  } else if (auto* wp = std::get_if<WeightedPair>(&out)) {
    wp->P = normalize_gauge(wp->P, GaugeFreedom::Phase);
  }
  return out;
}

namespace detail {

inline bool scalar_close(Scalar a, Scalar b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool matrix_close(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return rel_residual(a, b) <= tol;
}

}  // namespace detail

/// Parameter-level equality after gauge normalization.
inline bool forms_equal(const CanonicalForm& a, const CanonicalForm& b, double tol = 1e-8) {
  CanonicalForm na = normalized(a), nb = normalized(b);
  if (na.index() != nb.index()) return false;
  if (const auto* x = std::get_if<Similarity>(&na)) {
    const auto& y = std::get<Similarity>(nb);
    return x->transpose == y.transpose && detail::scalar_close(x->lambda, y.lambda, tol) &&
           detail::matrix_close(x->P, y.P, tol);
  }
  if (const auto* x = std::get_if<UnitarySimilarity>(&na)) {
    const auto& y = std::get<UnitarySimilarity>(nb);
    return x->transpose == y.transpose && detail::scalar_close(x->sign, y.sign, tol) &&
           detail::matrix_close(x->U, y.U, tol);
  }
  if (const auto* x = std::get_if<OrthCongruence>(&na)) {
    const auto& y = std::get<OrthCongruence>(nb);
    return detail::scalar_close(x->lambda, y.lambda, tol) && detail::matrix_close(x->O, y.O, tol);
  }
  if (const auto* x = std::get_if<DiagSelection>(&na)) {
    const auto& y = std::get<DiagSelection>(nb);
    if (x->p != y.p) return false;
    for (size_t i = 0; i < x->C.size(); ++i)
      if (!detail::scalar_close(x->C[i], y.C[i], tol)) return false;
    return true;
  }
  if (const auto* x = std::get_if<TriSimilarity>(&na)) {
    const auto& y = std::get<TriSimilarity>(nb);
    return x->flip == y.flip && detail::scalar_close(x->lambda, y.lambda, tol) &&
           detail::matrix_close(x->P, y.P, tol);
  }
  if (std::holds_alternative<ZeroMapForm>(na)) return true;
  return false;
}

inline bool pair_forms_equal(const PairForm& a, const PairForm& b, const Space& space,
                             double tol = 1e-8) {
  PairForm na = normalized_pair(a, space), nb = normalized_pair(b, space);
  if (na.index() != nb.index()) return false;
  if (const auto* x = std::get_if<SimilarityPair>(&na)) {
    const auto& y = std::get<SimilarityPair>(nb);
    return x->transpose == y.transpose && detail::scalar_close(x->c, y.c, tol) &&
           detail::matrix_close(x->P, y.P, tol);
  }
  if (const auto* x = std::get_if<SandwichPair>(&na)) {
    const auto& y = std::get<SandwichPair>(nb);
    return x->transpose == y.transpose && detail::matrix_close(x->P, y.P, tol) &&
           detail::matrix_close(x->Q, y.Q, tol);
  }
  if (const auto* x = std::get_if<CongruencePair>(&na)) {
    const auto& y = std::get<CongruencePair>(nb);
    return x->transpose == y.transpose && detail::scalar_close(x->c, y.c, tol) &&
           detail::matrix_close(x->P, y.P, tol);
  }
  if (const auto* x = std::get_if<DiagPair>(&na)) {
    const auto& y = std::get<DiagPair>(nb);
    if (x->perm != y.perm) return false;
    for (size_t i = 0; i < x->C.size(); ++i)
      if (!detail::scalar_close(x->C[i], y.C[i], tol)) return false;
    return true;
  }
  if (const auto* x = std::get_if<WeightedPair>(&na)) {
    const auto& y = std::get<WeightedPair>(nb);
    return x->transpose == y.transpose && x->a == y.a && x->b == y.b && x->c == y.c &&
           x->d == y.d && detail::matrix_close(x->P, y.P, tol);
  }
  return false;
}

}  // namespace kpres

#endif  // KPRES_CANONICAL_FORMS_HPP
