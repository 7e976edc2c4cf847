#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

#include "quatsamp/errors.hpp"

namespace quatsamp {

/// Quaternion q = w + x*i + y*j + z*k over double components.
/// Multiplication follows the Hamilton rules i*j = k, j*k = i, k*i = j,
/// i^2 = j^2 = k^2 = -1 and is non-commutative.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0,
                       double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  /// Build from the complex pair q = z1 + z2*j, z1 = w + x*i, z2 = y + z*i.
  static Quaternion from_complex_pair(std::complex<double> z1,
                                      std::complex<double> z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }

  std::complex<double> complex_part_1() const { return {w, x}; }
  std::complex<double> complex_part_2() const { return {y, z}; }

  double real() const { return w; }
  double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

  Quaternion conj() const { return {w, -x, -y, -z}; }

  bool is_zero(double tol = 0.0) const { return norm() <= tol; }

  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  Quaternion& operator+=(const Quaternion& r) {
    w += r.w;
    x += r.x;
    y += r.y;
    z += r.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& r) {
    w -= r.w;
    x -= r.x;
    y -= r.y;
    z -= r.z;
    return *this;
  }
  Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
};

inline Quaternion operator+(Quaternion a, const Quaternion& b) {
  return a += b;
}
inline Quaternion operator-(Quaternion a, const Quaternion& b) {
  return a -= b;
}
inline Quaternion operator*(Quaternion a, double s) { return a *= s; }
inline Quaternion operator*(double s, Quaternion a) { return a *= s; }
inline Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product.
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

inline double abs(const Quaternion& q) { return q.norm(); }

/// q^{-1} = conj(q) / |q|^2.  Throws zero_division when |q| is below the
/// scale-relative guard.
Quaternion inverse(const Quaternion& q);

inline Quaternion operator/(const Quaternion& a, const Quaternion& b) {
  return a * inverse(b);
}

/// Integer power by repeated multiplication (powers of one quaternion
/// commute with each other).
Quaternion pow(const Quaternion& q, unsigned n);

/// Similarity orbit of a quaternion: all alpha^{-1} q alpha share the real
/// part `re` and the imaginary magnitude `r` (r >= 0).  r = 0 encodes a real
/// singleton orbit.  The standard representative is re + r*i.
struct OrbitClass {
  double re = 0.0;
  double r = 0.0;

  Quaternion representative() const { return {re, r, 0.0, 0.0}; }

  bool contains(const Quaternion& q, double tol) const {
    return std::abs(q.real() - re) <= tol && std::abs(q.imag_norm() - r) <= tol;
  }
};

inline OrbitClass orbit_of(const Quaternion& q) {
  return {q.real(), q.imag_norm()};
}

/// True iff p and q share a similarity orbit: equal real parts and norms
/// within tol.
bool is_similar(const Quaternion& p, const Quaternion& q, double tol);

/// The complex orbit representative with nonnegative imaginary part:
/// Re q + |Im q| * i.  Quaternions with negligible imaginary part map to
/// their real part.
Quaternion standardize(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace quatsamp
