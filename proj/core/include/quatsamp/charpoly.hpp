#pragma once

#include <vector>

#include "quatsamp/qmatrix.hpp"
#include "quatsamp/qpoly.hpp"

namespace quatsamp {

struct CharPolyResult {
  QPoly poly;
  std::vector<ZeroReport> zero_classes;
  std::vector<OrbitClass> spectrum_classes;
};

/// Characteristic polynomial of a tridiagonal symmetric quaternion matrix:
/// the boundary polynomial of the difference equation with a(k) = A[k,k],
/// b(k) = A[k,k+1], h1 = h2 = 0, b(0) = b(n) = 1.  Degree exactly n; the
/// similarity closure of its zero set is the right spectrum of A.
QPoly char_poly(const QMatrix& A, const Quaternion& s);

/// Cross-checks the zero classes of char_poly against the standard
/// eigenvalues computed through the complex adjoint.  Throws
/// spectrum_mismatch when the orbit multisets differ (an internal
/// assertion; the two routes must agree).
CharPolyResult spectrum_check(const QMatrix& A, const Quaternion& s);

}  // namespace quatsamp
