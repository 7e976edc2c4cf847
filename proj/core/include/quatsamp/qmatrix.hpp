#pragma once

#include <complex>
#include <vector>

#include "quatsamp/quaternion.hpp"

namespace quatsamp {

/// H^N vector; right scalar multiplication, inner product conjugate-linear
/// in the first slot: <x,y> = sum conj(x_m) y_m.
using QVector = std::vector<Quaternion>;

Quaternion inner(const QVector& x, const QVector& y);
double vec_norm(const QVector& x);
QVector operator*(const QVector& x, const Quaternion& alpha);  // right mult
QVector operator+(const QVector& x, const QVector& y);
QVector operator-(const QVector& x, const QVector& y);

/// Dense rectangular quaternion matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static QMatrix identity(int n);
  static QMatrix tridiagonal(const std::vector<Quaternion>& diag,
                             const std::vector<Quaternion>& off);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Quaternion& operator()(int r, int c) {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  const Quaternion& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  QMatrix conj_transpose() const;
  QMatrix transpose_nonconj() const;  // entrywise transpose, no conjugation
  double frobenius() const;

  QMatrix operator*(const QMatrix& rhs) const;
  QVector operator*(const QVector& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Quaternion> data_;
};

/// Dense complex matrix used for the complex adjoint chi_A.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::complex<double>> data;  // row-major

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c)
      : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

  std::complex<double>& at(int r, int c) {
    return data[static_cast<size_t>(r) * cols + c];
  }
  const std::complex<double>& at(int r, int c) const {
    return data[static_cast<size_t>(r) * cols + c];
  }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  double frobenius() const;
};

/// Right eigenpair A xi = xi lambda with the standard (complex,
/// nonnegative-imaginary) eigenvalue and a unit eigenvector.
struct EigenPair {
  Quaternion value;
  QVector vector;
};

/// ||A A* - A* A||_F <= tol ||A||_F^2.
bool is_normal(const QMatrix& A, double tol);

/// Normality criterion for symmetric quaternion matrices via the real
/// decomposition A = L0 + i L1 + j L2 + k L3: normal iff L0 commutes with
/// L1, L2, L3.  Throws not_symmetric when A != A^T entrywise.
bool normality_by_parts(const QMatrix& A, double tol);

/// chi_A = [[A1, A2], [-conj(A2), conj(A1)]] for A = A1 + A2 j.
ComplexMatrix complex_adjoint(const QMatrix& A);

/// All n standard eigenvalues with recovered unit eigenvectors.  Eigenpairs
/// are sorted by (Re, Im) of the value; vectors inside a repeated standard
/// value are orthonormalized.  For normal A the vectors are pairwise
/// orthogonal.
std::vector<EigenPair> right_eigen(const QMatrix& A);

/// Quaternion Gram-Schmidt with right scalar multiplication:
/// v <- v - sum u_i <u_i, v>.  Output is orthonormal with the same right
/// H-span.  Throws dependent_input naming the 1-based offending index.
std::vector<QVector> gram_schmidt(const std::vector<QVector>& vs);

}  // namespace quatsamp
