#include "quatsamp/charpoly.hpp"

#include <algorithm>
#include <cmath>

#include "quatsamp/bvp.hpp"
#include "quatsamp/errors.hpp"

namespace quatsamp {

namespace {

BvpSpec embed(const QMatrix& A) {
  if (A.rows() != A.cols()) {
    fail(errc::not_tridiagonal_symmetric, "matrix must be square");
  }
  const int n = A.rows();
  const double f = A.frobenius();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double mag = A(r, c).norm();
      if (std::abs(r - c) > 1 && mag > 1e-12 * f) {
        fail(errc::not_tridiagonal_symmetric, "matrix is not tridiagonal");
      }
      if (std::abs(r - c) == 1 && (A(r, c) - A(c, r)).norm() > 1e-12 * f) {
        fail(errc::not_tridiagonal_symmetric, "off-diagonals are not symmetric");
      }
    }
  }
  BvpSpec spec;
  spec.N = n;
  for (int k = 0; k < n; ++k) spec.a.push_back(A(k, k));
  spec.b.push_back(Quaternion(1.0));  // b(0)
  for (int k = 0; k + 1 < n; ++k) {
    const Quaternion off = A(k, k + 1);
    if (off.norm() <= 1e-12 * std::max(1.0, f)) {
      fail(errc::zero_off_diagonal,
           "zero off-diagonal entry decouples the matrix; split blocks first");
    }
    spec.b.push_back(off);
  }
  spec.b.push_back(Quaternion(1.0));  // b(n)
  return spec;
}

}  // namespace

QPoly char_poly(const QMatrix& A, const Quaternion& s) {
  if (s.norm() == 0.0) fail(errc::zero_division, "s must be nonzero");
  const BvpSpec spec = embed(A);
  const PhiTable table = build_phi(spec);
  return boundary_poly(table, spec, s);
}

CharPolyResult spectrum_check(const QMatrix& A, const Quaternion& s) {
  CharPolyResult out;
  out.poly = char_poly(A, s);
  out.zero_classes = zeros(out.poly);
  for (const auto& pr : right_eigen(A)) {
    out.spectrum_classes.push_back(orbit_of(pr.value));
  }

  // match orbit multisets both ways within 1e-6 (absolute + relative)
  auto close = [](const OrbitClass& a, const OrbitClass& b) {
    const double tol = 1e-6 * (1.0 + std::abs(a.re) + a.r);
    return std::abs(a.re - b.re) <= tol && std::abs(a.r - b.r) <= tol;
  };
  std::vector<bool> used(out.spectrum_classes.size(), false);
  for (const auto& zc : out.zero_classes) {
    bool found = false;
    for (size_t m = 0; m < out.spectrum_classes.size(); ++m) {
      if (close(zc.orbit, out.spectrum_classes[m])) {
        used[m] = found = true;
        // spherical/multiple orbits may absorb several standard eigenvalues
      }
    }
    if (!found) {
      fail(errc::spectrum_mismatch,
           "zero class has no matching standard eigenvalue");
    }
  }
  for (size_t m = 0; m < used.size(); ++m) {
    if (!used[m]) {
      fail(errc::spectrum_mismatch,
           "standard eigenvalue has no matching zero class");
    }
  }
  return out;
}

}  // namespace quatsamp
