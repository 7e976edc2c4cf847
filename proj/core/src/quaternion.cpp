#include "quatsamp/quaternion.hpp"

#include <ostream>

#include "quatsamp/format.hpp"

namespace quatsamp {

Quaternion inverse(const Quaternion& q) {
  const double n2 = q.norm_sq();
  const double tol = 1e-13 * std::max(1.0, q.norm());
  if (q.norm() <= tol) {
    fail(errc::zero_division, "cannot invert a (near-)zero quaternion");
  }
  Quaternion c = q.conj();
  return c * (1.0 / n2);
}

Quaternion pow(const Quaternion& q, unsigned n) {
  Quaternion result(1.0);
  Quaternion base = q;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

bool is_similar(const Quaternion& p, const Quaternion& q, double tol) {
  return std::abs(p.real() - q.real()) <= tol &&
         std::abs(p.norm() - q.norm()) <= tol;
}

Quaternion standardize(const Quaternion& q) {
  const double im = q.imag_norm();
  if (im <= 1e-13 * (1.0 + q.norm())) {
    return Quaternion(q.real());
  }
  return {q.real(), im, 0.0, 0.0};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << format_quaternion(q, 6);
}

}  // namespace quatsamp
