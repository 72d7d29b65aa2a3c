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

#ifndef KPRES_CORE_HPP
#define KPRES_CORE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kpres {

/// All matrix entries are complex doubles; real-field data carries zero
/// imaginary parts.
using Scalar = std::complex<double>;

enum class ErrorCode {
  SingularMatrix,
  NotHermitian,
  NotPSD,
  ShapeMismatch,
  UnsupportedSpace,
  NotInDomain,
  NotLinear,
  NotInCodomain,
  FormSpaceMismatch,
  SingularP,
  BadK,
  HypothesisViolated,
  NotAPreserver,
  DegenerateZeroMap,
  AmbiguousIntertwiner,
  NonUnitRootLambda,
  InjectivityRequired,
  UnsupportedN,
  NotBijective,
  SpaceNotStarClosed,
  NotVerifiedPair,
  RecoveryFailed,
  BadExponent,
  BadArity,
  BadArgument,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnsupportedSpace: return "UnsupportedSpace";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::NotInCodomain: return "NotInCodomain";
    case ErrorCode::FormSpaceMismatch: return "FormSpaceMismatch";
    case ErrorCode::SingularP: return "SingularP";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotAPreserver: return "NotAPreserver";
    case ErrorCode::DegenerateZeroMap: return "DegenerateZeroMap";
    case ErrorCode::AmbiguousIntertwiner: return "AmbiguousIntertwiner";
    case ErrorCode::NonUnitRootLambda: return "NonUnitRootLambda";
    case ErrorCode::InjectivityRequired: return "InjectivityRequired";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::SpaceNotStarClosed: return "SpaceNotStarClosed";
    case ErrorCode::NotVerifiedPair: return "NotVerifiedPair";
    case ErrorCode::RecoveryFailed: return "RecoveryFailed";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

/// Uniform numeric comparison contract used throughout the library.
struct ToleranceConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double neighborhood_radius = 0.05;

  void validate() const {
    require(rel_tol > 0 && rel_tol < 1 && abs_tol > 0 && neighborhood_radius > 0,
            ErrorCode::BadArgument, "tolerance config out of range");
  }
};

/// Exact rational exponent for spectral powers.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    require(den != 0, ErrorCode::BadArgument, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }
  bool denominator_even() const { return den % 2 == 0; }
  Rational inverse() const {
    require(num != 0, ErrorCode::BadExponent, "inverse of zero exponent");
    return Rational(den, num);
  }
  Rational operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

/// Integer power of a scalar by repeated multiplication (exact for small |k|).
inline Scalar scalar_int_pow(Scalar z, int k) {
  if (k == 0) return Scalar(1.0, 0.0);
  bool neg = k < 0;
  unsigned e = neg ? static_cast<unsigned>(-(long long)k) : static_cast<unsigned>(k);
  Scalar acc(1.0, 0.0);
  Scalar base = z;
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1;
  }
  return neg ? Scalar(1.0, 0.0) / acc : acc;
}

inline bool scalar_finite(Scalar z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace kpres

#endif  // KPRES_CORE_HPP
