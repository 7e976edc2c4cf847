#pragma once

#include <random>

#include "quatsamp/bvp.hpp"
#include "quatsamp/qmatrix.hpp"
#include "quatsamp/quaternion.hpp"

namespace quatsamp {

/// Random inputs shared by the property suites and the CLI verify command.
/// All draws are deterministic functions of the engine state.

inline Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(rng), d(rng), d(rng), d(rng)};
}

inline Quaternion random_nonzero_quaternion(std::mt19937_64& rng,
                                            double scale = 1.0) {
  for (;;) {
    Quaternion q = random_quaternion(rng, scale);
    if (q.norm() > 0.1 * scale) return q;
  }
}

inline Quaternion random_unit_quaternion(std::mt19937_64& rng) {
  const Quaternion q = random_nonzero_quaternion(rng);
  return q * (1.0 / q.norm());
}

inline Quaternion random_unit_pure_quaternion(std::mt19937_64& rng) {
  for (;;) {
    Quaternion q = random_quaternion(rng);
    q.w = 0.0;
    const double n = q.norm();
    if (n > 0.1) return q * (1.0 / n);
  }
}

/// Normal boundary-value spec: a(k) = r0(k) + q*r1 with one fixed unit pure
/// axis q and a constant imaginary weight r1, b(k) real nonzero, h real.
/// Then L = L0 + (r1 q) I with L0 real symmetric tridiagonal, so L0 commutes
/// with every imaginary part and L is normal.
inline BvpSpec random_normal_spec(std::mt19937_64& rng, int N) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  const Quaternion axis = random_unit_pure_quaternion(rng);
  const double r1 = d(rng);
  BvpSpec spec;
  spec.N = N;
  for (int k = 0; k < N; ++k) {
    spec.a.push_back(Quaternion(d(rng)) + axis * r1);
  }
  for (int k = 0; k <= N; ++k) {
    double v = d(rng);
    if (std::abs(v) < 0.2) v = v < 0 ? v - 0.2 : v + 0.2;
    spec.b.push_back(Quaternion(v));
  }
  spec.h1 = Quaternion(0.5 * d(rng));
  spec.h2 = Quaternion(0.5 * d(rng));
  return spec;
}

/// Random tridiagonal symmetric quaternion matrix with nonzero off-diagonals
/// (no normality requirement).
inline QMatrix random_tridiagonal_symmetric(std::mt19937_64& rng, int n) {
  std::vector<Quaternion> diag, off;
  for (int k = 0; k < n; ++k) diag.push_back(random_quaternion(rng));
  for (int k = 0; k + 1 < n; ++k) off.push_back(random_nonzero_quaternion(rng));
  return QMatrix::tridiagonal(diag, off);
}

/// Random symmetric (entrywise transpose) quaternion matrix.
inline QMatrix random_symmetric(std::mt19937_64& rng, int n) {
  QMatrix A(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      A(r, c) = random_quaternion(rng);
      A(c, r) = A(r, c);
    }
  }
  return A;
}

/// Symmetric matrix that is normal by construction: S0 + (i a1 + j a2 + k a3) S0
/// shares one real symmetric part across all four components.
inline QMatrix random_normal_symmetric(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  QMatrix S0(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      S0(r, c) = Quaternion(d(rng));
      S0(c, r) = S0(r, c);
    }
  }
  const Quaternion mix(1.0, d(rng), d(rng), d(rng));
  QMatrix A(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) A(r, c) = mix * S0(r, c).real();
  return A;
}

inline QMatrix random_qmatrix(std::mt19937_64& rng, int rows, int cols) {
  QMatrix A(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) A(r, c) = random_quaternion(rng);
  return A;
}

}  // namespace quatsamp
