#pragma once

#include <complex>
#include <vector>

#include "quatsamp/quaternion.hpp"

namespace quatsamp {

/// Simple quaternion polynomial with coefficients strictly on the LEFT of
/// the powers: p(z) = sum_k coeffs[k] * z^k.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }

  /// Index of the last nonzero coefficient; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Quaternion coeff(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Quaternion();
  }

  double coeff_abs_sum() const;

  /// sum |c_k| max(1,|z|)^k, the natural evaluation scale at z.
  double scale_at(const Quaternion& z) const;

  QPoly operator*(const Quaternion& right) const;  // each c_k -> c_k * right
  QPoly operator+(const QPoly& other) const;
  QPoly operator-(const QPoly& other) const;

 private:
  void trim();
  std::vector<Quaternion> coeffs_;
};

enum class ZeroKind { real_isolated, nonreal_isolated, spherical };

const char* zero_kind_name(ZeroKind k) noexcept;

/// One zero class of a simple quaternion polynomial.  For isolated zeros the
/// representative is the zero itself; for spherical zeros it is the standard
/// orbit representative re + r*i.
struct ZeroReport {
  ZeroKind kind;
  Quaternion representative;
  OrbitClass orbit;
  // false when the spherical-vs-isolated remainder test landed within a
  // factor of 10 of its threshold
  bool confident = true;
};

/// Left-coefficient Horner evaluation.
Quaternion eval(const QPoly& p, const Quaternion& z);

/// Real polynomial q(x) = sum_j (sum_{k+l=j} conj(c_k) c_l) x^j of degree 2n.
/// Every zero class of p corresponds to a complex root pair of q.
/// Throws degenerate_input when p has degree < 1.
std::vector<double> companion_real(const QPoly& p);

/// Roots of a real polynomial (ascending coefficients) via the balanced
/// companion matrix, polished by complex Newton steps.
std::vector<std::complex<double>> real_poly_roots(
    const std::vector<double>& coeffs);

/// Right division by the real quadratic z^2 - 2 re z + (re^2 + r^2):
/// p(z) = quotient(z) * d(z) + B z + C.  Real quadratics commute with
/// quaternion coefficients, so the quotient is well defined.
struct QuadDivision {
  QPoly quotient;
  Quaternion B;
  Quaternion C;
};
QuadDivision divide_right_quadratic(const QPoly& p, double re, double r);

/// All zero classes of p with isolated/spherical classification.
/// Candidate orbits come from the complex roots of companion_real; each is
/// tested by right division (small remainder => spherical, otherwise the
/// isolated zero -B^{-1} C is verified by evaluation).
std::vector<ZeroReport> zeros(const QPoly& p);

/// Maps each non-real isolated zero z to s^{-1} z s; real and spherical
/// entries are unchanged (the orbit is conjugation-invariant).
std::vector<ZeroReport> conjugate_zero_set(std::vector<ZeroReport> reports,
                                           const Quaternion& s);

}  // namespace quatsamp
