#include "quatsamp/qmatrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "quatsamp/errors.hpp"

namespace quatsamp {

Quaternion inner(const QVector& x, const QVector& y) {
  if (x.size() != y.size()) {
    fail(errc::dimension_mismatch, "inner product of unequal lengths");
  }
  Quaternion acc;
  for (size_t m = 0; m < x.size(); ++m) acc += x[m].conj() * y[m];
  return acc;
}

double vec_norm(const QVector& x) {
  double s = 0.0;
  for (const auto& q : x) s += q.norm_sq();
  return std::sqrt(s);
}

QVector operator*(const QVector& x, const Quaternion& alpha) {
  QVector out(x.size());
  for (size_t m = 0; m < x.size(); ++m) out[m] = x[m] * alpha;
  return out;
}

QVector operator+(const QVector& x, const QVector& y) {
  QVector out(x.size());
  for (size_t m = 0; m < x.size(); ++m) out[m] = x[m] + y[m];
  return out;
}

QVector operator-(const QVector& x, const QVector& y) {
  QVector out(x.size());
  for (size_t m = 0; m < x.size(); ++m) out[m] = x[m] - y[m];
  return out;
}

QMatrix QMatrix::identity(int n) {
  QMatrix out(n, n);
  for (int r = 0; r < n; ++r) out(r, r) = Quaternion(1.0);
  return out;
}

QMatrix QMatrix::tridiagonal(const std::vector<Quaternion>& diag,
                             const std::vector<Quaternion>& off) {
  const int n = static_cast<int>(diag.size());
  if (off.size() + 1 != diag.size()) {
    fail(errc::dimension_mismatch, "tridiagonal needs n-1 off-diagonals");
  }
  QMatrix out(n, n);
  for (int r = 0; r < n; ++r) {
    out(r, r) = diag[static_cast<size_t>(r)];
    if (r + 1 < n) {
      out(r, r + 1) = off[static_cast<size_t>(r)];
      out(r + 1, r) = off[static_cast<size_t>(r)];
    }
  }
  return out;
}

QMatrix QMatrix::conj_transpose() const {
  QMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

QMatrix QMatrix::transpose_nonconj() const {
  QMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

double QMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& q : data_) s += q.norm_sq();
  return std::sqrt(s);
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    fail(errc::dimension_mismatch, "matrix product shape mismatch");
  }
  QMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Quaternion& a = (*this)(r, k);
      if (a.norm_sq() == 0.0) continue;
      for (int c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

QVector QMatrix::operator*(const QVector& rhs) const {
  if (static_cast<size_t>(cols_) != rhs.size()) {
    fail(errc::dimension_mismatch, "matrix-vector shape mismatch");
  }
  QVector out(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      out[static_cast<size_t>(r)] += (*this)(r, c) * rhs[static_cast<size_t>(c)];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  QMatrix out(rows_, cols_);
  for (size_t m = 0; m < data_.size(); ++m) out.data_[m] = data_[m] + rhs.data_[m];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  QMatrix out(rows_, cols_);
  for (size_t m = 0; m < data_.size(); ++m) out.data_[m] = data_[m] - rhs.data_[m];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  ComplexMatrix out(rows, rhs.cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < cols; ++k) {
      const auto a = at(r, k);
      for (int c = 0; c < rhs.cols; ++c) out.at(r, c) += a * rhs.at(k, c);
    }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  ComplexMatrix out(rows, cols);
  for (size_t m = 0; m < data.size(); ++m) out.data[m] = data[m] - rhs.data[m];
  return out;
}

double ComplexMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& z : data) s += std::norm(z);
  return std::sqrt(s);
}

bool is_normal(const QMatrix& A, double tol) {
  if (A.rows() != A.cols()) {
    fail(errc::dimension_mismatch, "normality test needs a square matrix");
  }
  const QMatrix At = A.conj_transpose();
  const double f = A.frobenius();
  return (A * At - At * A).frobenius() <= tol * f * f;
}

bool normality_by_parts(const QMatrix& A, double tol) {
  if (A.rows() != A.cols()) {
    fail(errc::dimension_mismatch, "normality test needs a square matrix");
  }
  const int n = A.rows();
  const double f = A.frobenius();
  if ((A - A.transpose_nonconj()).frobenius() > tol * f) {
    fail(errc::not_symmetric, "matrix is not symmetric (entrywise transpose)");
  }
  Eigen::MatrixXd L[4];
  for (auto& m : L) m = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Quaternion& q = A(r, c);
      L[0](r, c) = q.w;
      L[1](r, c) = q.x;
      L[2](r, c) = q.y;
      L[3](r, c) = q.z;
    }
  }
  for (int m = 1; m < 4; ++m) {
    if ((L[0] * L[m] - L[m] * L[0]).norm() > tol * f * f) return false;
  }
  return true;
}

ComplexMatrix complex_adjoint(const QMatrix& A) {
  if (A.rows() != A.cols()) {
    fail(errc::dimension_mismatch, "complex adjoint needs a square matrix");
  }
  const int n = A.rows();
  ComplexMatrix chi(2 * n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const auto a1 = A(r, c).complex_part_1();
      const auto a2 = A(r, c).complex_part_2();
      chi.at(r, c) = a1;
      chi.at(r, c + n) = a2;
      chi.at(r + n, c) = -std::conj(a2);
      chi.at(r + n, c + n) = std::conj(a1);
    }
  }
  return chi;
}

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out(r, c) = m.at(r, c);
  return out;
}

/// Quaternion vector from a chi_A eigenvector (u; v): xi_t = u_t - conj(v_t) j.
/// When the eigenvalue has negative imaginary part, a right factor j flips it
/// to the standard representative.
QVector recover_vector(const Eigen::VectorXcd& col, int n, bool flip) {
  QVector xi(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    xi[static_cast<size_t>(t)] =
        Quaternion::from_complex_pair(col(t), -std::conj(col(t + n)));
  }
  if (flip) xi = xi * Quaternion::j();
  return xi;
}

Eigen::VectorXcd to_adjoint_coords(const QVector& xi) {
  const int n = static_cast<int>(xi.size());
  Eigen::VectorXcd y(2 * n);
  for (int t = 0; t < n; ++t) {
    y(t) = xi[static_cast<size_t>(t)].complex_part_1();
    y(t + n) = -std::conj(xi[static_cast<size_t>(t)].complex_part_2());
  }
  return y;
}

double residual(const QMatrix& A, const QVector& xi, const Quaternion& lam) {
  return vec_norm(A * xi - xi * lam);
}

void apply_phase_convention(QVector& xi) {
  for (const auto& q : xi) {
    if (q.norm() <= 1e-10) continue;
    const auto z1 = q.complex_part_1();
    const auto z2 = q.complex_part_2();
    Quaternion alpha(1.0);
    if (std::abs(z1) > 1e-12) {
      const auto a = std::conj(z1) / std::abs(z1);
      alpha = Quaternion(a.real(), a.imag());
    } else {
      const auto a = z2 / std::abs(z2);
      alpha = Quaternion(a.real(), a.imag());
    }
    xi = xi * alpha;
    return;
  }
}

}  // namespace

std::vector<EigenPair> right_eigen(const QMatrix& A) {
  if (A.rows() != A.cols()) {
    fail(errc::dimension_mismatch, "right_eigen needs a square matrix");
  }
  const int n = A.rows();
  if (n == 0) return {};
  const double anorm = A.frobenius();
  const double res_tol = 1e-9 * std::max(anorm, 1e-30);

  const Eigen::MatrixXcd chi = to_eigen(complex_adjoint(A));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(chi, true);
  if (ces.info() != Eigen::Success) {
    fail(errc::eigen_solver_failure, "QR iteration on chi_A did not converge");
  }
  const auto& w = ces.eigenvalues();
  const auto& V = ces.eigenvectors();

  // greedy nearest-conjugate pairing, most-imaginary values first
  struct Pairing {
    std::complex<double> value;  // standard value, Im >= 0
    int col_pos;                 // column whose eigenvalue has Im >= 0
    int col_neg;
  };
  std::vector<int> order(static_cast<size_t>(2 * n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(w(a).imag()) > std::abs(w(b).imag());
  });
  std::vector<bool> used(static_cast<size_t>(2 * n), false);
  std::vector<Pairing> pairs;
  pairs.reserve(static_cast<size_t>(n));
  for (int i : order) {
    if (used[static_cast<size_t>(i)]) continue;
    const auto target = std::conj(w(i));
    int best = -1;
    double bestd = 0.0;
    for (int j = 0; j < 2 * n; ++j) {
      if (j == i || used[static_cast<size_t>(j)]) continue;
      const double d = std::abs(w(j) - target);
      if (best < 0 || d < bestd) {
        best = j;
        bestd = d;
      }
    }
    used[static_cast<size_t>(i)] = used[static_cast<size_t>(best)] = true;
    const double re = 0.5 * (w(i).real() + w(best).real());
    const double im = 0.5 * (std::abs(w(i).imag()) + std::abs(w(best).imag()));
    const int pos = w(i).imag() >= w(best).imag() ? i : best;
    const int neg = pos == i ? best : i;
    pairs.push_back({{re, im}, pos, neg});
  }

  // cluster repeated standard values; floating-point jitter in the real
  // parts rules out sort-then-split, so group by full complex distance
  const double ctol = 1e-8 * (1.0 + anorm);
  struct Cluster {
    std::complex<double> sum{0.0, 0.0};
    std::vector<Pairing> members;
  };
  std::vector<Cluster> clusters;
  for (const auto& pr : pairs) {
    Cluster* home = nullptr;
    for (auto& cl : clusters) {
      const auto mean = cl.sum / static_cast<double>(cl.members.size());
      if (std::abs(pr.value - mean) <= ctol) {
        home = &cl;
        break;
      }
    }
    if (!home) {
      clusters.emplace_back();
      home = &clusters.back();
    }
    home->sum += pr.value;
    home->members.push_back(pr);
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& a, const Cluster& b) {
              const auto ma = a.sum / static_cast<double>(a.members.size());
              const auto mb = b.sum / static_cast<double>(b.members.size());
              if (ma.real() != mb.real()) return ma.real() < mb.real();
              return ma.imag() < mb.imag();
            });

  std::vector<EigenPair> out;
  for (const auto& cl : clusters) {
    const size_t m = cl.members.size();
    const std::complex<double> mean = cl.sum / static_cast<double>(m);
    const Quaternion lam(mean.real(), std::max(0.0, mean.imag()));

    std::vector<QVector> candidates;
    for (const auto& pr : cl.members)
      candidates.push_back(recover_vector(V.col(pr.col_pos), n, false));
    for (const auto& pr : cl.members)
      candidates.push_back(recover_vector(V.col(pr.col_neg), n, true));

    // inverse iteration on chi_A shifted by the cluster mean; the shift is
    // already eps-accurate, so a step or two drives residuals to the noise
    // floor, which downstream interpolation accuracy depends on
    Eigen::MatrixXcd shifted = chi;
    const double delta = 1e-10 * std::max(anorm, 1.0);
    for (int t = 0; t < 2 * n; ++t) shifted(t, t) -= mean + delta;
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
    const double sharp_tol = 256.0 * 2.22e-16 * std::max(anorm, 1e-30);

    std::vector<QVector> accepted;
    for (auto& cand : candidates) {
      if (accepted.size() == m) break;
      QVector work = cand;
      for (int step = 0; step < 3; ++step) {
        if (residual(A, work, lam) <= sharp_tol * vec_norm(work)) break;
        Eigen::VectorXcd y = lu.solve(to_adjoint_coords(work));
        if (!y.allFinite() || y.norm() == 0.0) break;
        y.normalize();
        const QVector next = recover_vector(y, n, false);
        if (residual(A, next, lam) / vec_norm(next) >=
            residual(A, work, lam) / vec_norm(work))
          break;
        work = next;
      }
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& u : accepted) work = work - u * inner(u, work);
      }
      const double wn = vec_norm(work);
      if (wn <= 1e-8 * vec_norm(cand)) continue;
      work = work * Quaternion(1.0 / wn);
      if (residual(A, work, lam) > res_tol) continue;
      accepted.push_back(std::move(work));
    }
    if (accepted.size() < m) {
      fail(errc::recovery_failure,
           "could not recover " + std::to_string(m) +
               " independent eigenvectors for a repeated standard value");
    }
    for (auto& xi : accepted) {
      apply_phase_convention(xi);
      out.push_back({lam, std::move(xi)});
    }
  }
  return out;
}

std::vector<QVector> gram_schmidt(const std::vector<QVector>& vs) {
  double scale = 0.0;
  for (const auto& v : vs) scale = std::max(scale, vec_norm(v));
  const double tol_dep = 1e-10 * scale;
  std::vector<QVector> out;
  out.reserve(vs.size());
  for (size_t t = 0; t < vs.size(); ++t) {
    QVector w = vs[t];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : out) w = w - u * inner(u, w);
    }
    const double wn = vec_norm(w);
    if (wn <= tol_dep) {
      fail(errc::dependent_input,
           "right-H-dependent vector at index " + std::to_string(t + 1));
    }
    out.push_back(w * Quaternion(1.0 / wn));
  }
  return out;
}

}  // namespace quatsamp
