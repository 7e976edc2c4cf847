#pragma once

#include <vector>

#include "quatsamp/qmatrix.hpp"
#include "quatsamp/qpoly.hpp"
#include "quatsamp/quaternion.hpp"

namespace quatsamp {

/// Boundary-value recurrence
///   b(k) x(k+1) + a(k) x(k) + b(k-1) x(k-1) = x(k) lambda,  k = 1..N
/// with boundary rows x(0) + h1 x(1) = 0 and x(N+1) + h2 x(N) = 0.
struct BvpSpec {
  int N = 0;
  std::vector<Quaternion> a;  // a(1..N), stored 0-based
  std::vector<Quaternion> b;  // b(0..N), each nonzero
  Quaternion h1;
  Quaternion h2;

  const Quaternion& a_at(int k) const { return a[static_cast<size_t>(k - 1)]; }
  const Quaternion& b_at(int k) const { return b[static_cast<size_t>(k)]; }

  /// Throws on size mismatch or a degenerate b(k).
  void validate() const;
};

/// Coefficient table of the recurrence solutions:
///   phi(k, lambda, s) = sum_j c(j,k) s lambda^j,  phi(1) = s, phi(0) = -h1 s.
/// Stored s-free, so one table serves every s.
class PhiTable {
 public:
  PhiTable() = default;
  PhiTable(int N, std::vector<std::vector<Quaternion>> cols)
      : N_(N), c_(std::move(cols)) {}

  int N() const { return N_; }

  /// c(j,k); zero outside the stored triangle.
  Quaternion coeff(int j, int k) const;

  Quaternion phi(int k, const Quaternion& lambda, const Quaternion& s) const;

  /// [phi(1,lambda,s), ..., phi(N,lambda,s)].
  QVector phi_vector(const Quaternion& lambda, const Quaternion& s) const;

  /// phi(k, ., s) as a simple quaternion polynomial in lambda.
  QPoly phi_poly(int k, const Quaternion& s) const;

 private:
  int N_ = 0;
  std::vector<std::vector<Quaternion>> c_;  // c_[k][j], k = 0..N+1
};

/// Sample points, orthogonal basis phi(lambda_k, s) and Lagrange-type
/// interpolation polynomials psi_k (degree <= N-1, psi_k(lambda_j) = delta).
struct SamplingExpansion {
  Quaternion s;
  std::vector<Quaternion> points;
  std::vector<QVector> basis;
  std::vector<QPoly> interpolants;
};

using TransformCoeffs = std::vector<Quaternion>;

/// Forward recurrence on the coefficient arrays.
PhiTable build_phi(const BvpSpec& spec);

/// p_N(lambda, s) = phi(N+1, lambda, s) + h2 phi(N, lambda, s), degree N.
QPoly boundary_poly(const PhiTable& table, const BvpSpec& spec,
                    const Quaternion& s);

/// N x N tridiagonal symmetric matrix form of the difference operator:
/// diagonal (a(1) - b(0) h1, a(2..N-1), a(N) - b(N) h2), off-diagonal b(1..N-1).
QMatrix build_L(const BvpSpec& spec);

/// psi_k = <phi(lambda_k,s), phi(.,s)> / ||phi(lambda_k,s)||^2 assembled
/// coefficient-wise from the table.
std::vector<QPoly> interpolants(const std::vector<Quaternion>& points,
                                const std::vector<QVector>& basis,
                                const PhiTable& table, const Quaternion& s);

/// Builds the expansion for a given (already orthogonal) point set; points
/// are sorted deterministically and orthogonality is verified.
SamplingExpansion expansion_from_points(const PhiTable& table,
                                        const Quaternion& s,
                                        std::vector<Quaternion> points);

/// Sample points via eigenpairs of L conjugated onto the shared first
/// entry s (requires L normal).
SamplingExpansion sample_points_method1(const BvpSpec& spec,
                                        const Quaternion& s);

/// Sample points via zeros of the boundary polynomial; spherical orbits are
/// filled by iteratively solving the inner-product orthogonality polynomial
/// starting from `seed` (default: the standard orbit representative).
SamplingExpansion sample_points_method2(const BvpSpec& spec,
                                        const Quaternion& s);

/// f_s(lambda) = sum_k conj(F(k)) phi(k, lambda, s).
Quaternion transform(const TransformCoeffs& F, const PhiTable& table,
                     const Quaternion& s, const Quaternion& lambda);

/// sum_k samples[k] psi_k(lambda, s), sample values on the LEFT.
Quaternion reconstruct(const std::vector<Quaternion>& samples,
                       const SamplingExpansion& exp, const Quaternion& lambda);

/// Rebuilds the sample points inside one spherical-zero orbit starting from
/// seed (a conjugate replacement when the orbit holds a single point, the
/// iterative orthogonality procedure when it holds several); everything
/// outside the orbit is retained.
SamplingExpansion alternate_expansion(const SamplingExpansion& exp,
                                      const BvpSpec& spec,
                                      const PhiTable& table,
                                      const OrbitClass& orbit,
                                      const Quaternion& seed);

/// Deterministic point ordering: (Re, |Im|, imaginary axis lexicographic).
bool point_less(const Quaternion& a, const Quaternion& b);

}  // namespace quatsamp
