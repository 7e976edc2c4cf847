#pragma once

// Shared golden inputs used across the unit and acceptance suites.

#include <cmath>

#include "quatsamp/bvp.hpp"
#include "quatsamp/qmatrix.hpp"
#include "quatsamp/quaternion.hpp"

namespace fixtures {

using quatsamp::BvpSpec;
using quatsamp::QMatrix;
using quatsamp::Quaternion;

inline const Quaternion I = Quaternion::i();
inline const Quaternion J = Quaternion::j();
inline const Quaternion K = Quaternion::k();
inline const double SQ3 = std::sqrt(3.0);

/// -i x(k+1) + j x(k) - i x(k-1) = x(k) lambda, x(0) = x(4) = 0.
inline BvpSpec tridiag_ij_spec() {
  BvpSpec spec;
  spec.N = 3;
  spec.a = {J, J, J};
  spec.b = {-I, -I, -I, -I};
  return spec;
}

/// Mixed-coefficient three-level problem with non-real boundary data.
inline BvpSpec mixed_coeff_spec() {
  BvpSpec spec;
  spec.N = 3;
  spec.a = {J, I, -K};
  spec.b = {I + J, SQ3 * J, J - K, Quaternion(1.0) + J};
  spec.h1 = -K;
  spec.h2 = -I;
  return spec;
}

/// 4x4 tridiagonal symmetric matrix with diagonal (1, i, j, k) and
/// off-diagonal (1+i, 1+j, 1+k).
inline QMatrix mixed_tridiag_matrix() {
  return QMatrix::tridiagonal(
      {Quaternion(1.0), I, J, K},
      {Quaternion(1.0) + I, Quaternion(1.0) + J, Quaternion(1.0) + K});
}

inline bool qclose(const Quaternion& a, const Quaternion& b, double tol) {
  return (a - b).norm() <= tol;
}

}  // namespace fixtures
