#include "quatsamp/qpoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "quatsamp/errors.hpp"

namespace quatsamp {

namespace {
constexpr double kTrimRel = 1e-13;
constexpr double kRemRel = 1e-8;   // spherical-vs-isolated remainder
constexpr double kEvalRel = 1e-8;  // zero acceptance
}  // namespace

void QPoly::trim() {
  double maxn = 0.0;
  for (const auto& c : coeffs_) maxn = std::max(maxn, c.norm());
  const double tol = kTrimRel * maxn;
  while (!coeffs_.empty() && coeffs_.back().norm() <= tol) coeffs_.pop_back();
}

double QPoly::coeff_abs_sum() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += c.norm();
  return s;
}

double QPoly::scale_at(const Quaternion& z) const {
  const double base = std::max(1.0, z.norm());
  double s = 0.0;
  double p = 1.0;
  for (const auto& c : coeffs_) {
    s += c.norm() * p;
    p *= base;
  }
  return s;
}

QPoly QPoly::operator*(const Quaternion& right) const {
  std::vector<Quaternion> out(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] * right;
  return QPoly(std::move(out));
}

QPoly QPoly::operator+(const QPoly& other) const {
  std::vector<Quaternion> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (size_t k = 0; k < out.size(); ++k)
    out[k] = coeff(k) + other.coeff(k);
  return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& other) const {
  std::vector<Quaternion> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (size_t k = 0; k < out.size(); ++k)
    out[k] = coeff(k) - other.coeff(k);
  return QPoly(std::move(out));
}

const char* zero_kind_name(ZeroKind k) noexcept {
  switch (k) {
    case ZeroKind::real_isolated:
      return "real_isolated";
    case ZeroKind::nonreal_isolated:
      return "nonreal_isolated";
    case ZeroKind::spherical:
      return "spherical";
  }
  return "?";
}

Quaternion eval(const QPoly& p, const Quaternion& z) {
  const auto& c = p.coeffs();
  if (c.empty()) return Quaternion();
  Quaternion acc = c.back();
  for (size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

std::vector<double> companion_real(const QPoly& p) {
  const int n = p.degree();
  if (n < 1) {
    fail(errc::degenerate_input,
         "companion_real needs degree >= 1, got " + std::to_string(n));
  }
  const auto& c = p.coeffs();
  std::vector<double> q(2 * static_cast<size_t>(n) + 1, 0.0);
  const double budget = p.coeff_abs_sum();
  for (size_t j = 0; j < q.size(); ++j) {
    Quaternion acc;
    for (size_t k = 0; k <= j; ++k) {
      const size_t l = j - k;
      if (k >= c.size() || l >= c.size()) continue;
      acc += c[k].conj() * c[l];
    }
    if (acc.imag_norm() > 1e-12 * budget * budget) {
      fail(errc::degenerate_input,
           "conj-convolution coefficient has non-real residue");
    }
    q[j] = acc.real();
  }
  return q;
}

namespace {

struct Derivatives {
  std::complex<double> p, d1, d2;
};

Derivatives eval_with_derivatives(const std::vector<double>& c, int deg,
                                  std::complex<double> z) {
  std::complex<double> p(c[static_cast<size_t>(deg)], 0.0);
  std::complex<double> d1(0.0, 0.0);
  std::complex<double> d2(0.0, 0.0);
  for (int k = deg - 1; k >= 0; --k) {
    d2 = d2 * z + d1;
    d1 = d1 * z + p;
    p = p * z + c[static_cast<size_t>(k)];
  }
  return {p, d1, 2.0 * d2};
}

}  // namespace

std::vector<std::complex<double>> real_poly_roots(
    const std::vector<double>& coeffs) {
  // trim leading (highest-order) near-zeros relative to the largest coeff
  double maxc = 0.0;
  for (double v : coeffs) maxc = std::max(maxc, std::abs(v));
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && std::abs(coeffs[static_cast<size_t>(deg)]) <= 1e-14 * maxc)
    --deg;
  if (deg < 1) {
    fail(errc::degenerate_input, "real polynomial of degree < 1");
  }

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  const double lead = coeffs[static_cast<size_t>(deg)];
  for (int k = 0; k < deg; ++k) {
    comp(k, deg - 1) = -coeffs[static_cast<size_t>(k)] / lead;
    if (k + 1 < deg) comp(k + 1, k) = 1.0;
  }

  // one pass of diagonal balancing keeps widely scaled coefficients sane
  Eigen::VectorXd d = Eigen::VectorXd::Ones(deg);
  for (int it = 0; it < 4; ++it) {
    for (int i = 0; i < deg; ++i) {
      double rn = comp.row(i).lpNorm<1>() - std::abs(comp(i, i));
      double cn = comp.col(i).lpNorm<1>() - std::abs(comp(i, i));
      if (rn <= 0 || cn <= 0) continue;
      double f = std::sqrt(cn / rn);
      f = std::clamp(f, 1.0 / 16.0, 16.0);
      // power-of-two factors scale exactly; anything else perturbs every
      // entry and costs sqrt-of-eps accuracy on defective eigenvalues
      f = std::exp2(std::round(std::log2(f)));
      if (f == 1.0) continue;
      comp.row(i) /= f;
      comp.col(i) *= f;
      d(i) *= f;
    }
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    fail(errc::root_solver_failure, "companion QR iteration did not converge");
  }

  std::vector<std::complex<double>> roots(static_cast<size_t>(deg));
  for (int m = 0; m < deg; ++m) {
    std::complex<double> z = es.eigenvalues()(m);
    // Newton polish on the real polynomial in complex arithmetic; the
    // budget allows for slow linear convergence near a multiple root
    for (int it = 0; it < 30; ++it) {
      const auto h = eval_with_derivatives(coeffs, deg, z);
      if (std::abs(h.d1) <= 1e-300) break;
      const std::complex<double> step = h.p / h.d1;
      z -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
    }
    // Newton stalls at ~sqrt(eps) on double roots, so also polish against
    // the derivative and keep that candidate when it lands nearby on an
    // equally small residue. Double roots are routine here, not an edge
    // case: a nonnegative polynomial touches zero with even multiplicity.
    std::complex<double> zd = z;
    for (int it = 0; it < 12; ++it) {
      const auto h = eval_with_derivatives(coeffs, deg, zd);
      if (std::abs(h.d2) <= 1e-300) break;
      const std::complex<double> step = h.d1 / h.d2;
      zd -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(zd))) break;
    }
    if (std::abs(zd - z) <= 1e-5 * (1.0 + std::abs(z))) {
      const double rz = std::abs(eval_with_derivatives(coeffs, deg, z).p);
      const double rd = std::abs(eval_with_derivatives(coeffs, deg, zd).p);
      // rounding noise of Horner at zd; residues below it are equal to zero
      // for the purpose of choosing between the two candidates
      double noise = 0.0;
      double pw = 1.0;
      const double base = std::max(1.0, std::abs(zd));
      for (int k = 0; k <= deg; ++k) {
        noise += std::abs(coeffs[static_cast<size_t>(k)]) * pw;
        pw *= base;
      }
      noise *= 1e-13;
      if (rd <= std::max(4.0 * rz, noise)) z = zd;
    }
    roots[static_cast<size_t>(m)] = z;
  }
  return roots;
}

QuadDivision divide_right_quadratic(const QPoly& p, double re, double r) {
  const double lin = 2.0 * re;
  const double cst = re * re + r * r;
  std::vector<Quaternion> work = p.coeffs();
  const int n = p.degree();
  std::vector<Quaternion> quot(n >= 2 ? static_cast<size_t>(n - 1) : 0);
  for (int k = n; k >= 2; --k) {
    const Quaternion t = work[static_cast<size_t>(k)];
    quot[static_cast<size_t>(k - 2)] = t;
    work[static_cast<size_t>(k - 1)] += lin * t;
    work[static_cast<size_t>(k - 2)] -= cst * t;
  }
  QuadDivision out;
  out.quotient = QPoly(std::move(quot));
  out.B = n >= 1 ? work[1] : Quaternion();
  out.C = work.empty() ? Quaternion() : work[0];
  return out;
}

namespace {

bool orbit_close(const OrbitClass& a, const OrbitClass& b) {
  return std::abs(a.re - b.re) + std::abs(a.r - b.r) <=
         1e-7 * (1.0 + std::abs(a.re) + a.r);
}

}  // namespace

std::vector<ZeroReport> zeros(const QPoly& p) {
  if (p.degree() < 1) {
    fail(errc::degenerate_input, "zeros needs degree >= 1");
  }

  std::vector<ZeroReport> reports;
  QPoly work = p;

  // c_0 = 0: factor the right power of z out; z = 0 is a real isolated zero
  {
    const auto& c = work.coeffs();
    const double tol = kTrimRel * work.coeff_abs_sum();
    size_t m = 0;
    while (m < c.size() && c[m].norm() <= tol) ++m;
    if (m > 0) {
      reports.push_back({ZeroKind::real_isolated, Quaternion(0.0),
                         OrbitClass{0.0, 0.0}, true});
      std::vector<Quaternion> rest(c.begin() + static_cast<long>(m), c.end());
      work = QPoly(std::move(rest));
      if (work.degree() < 1) return reports;
    }
  }

  const auto qreal = companion_real(work);
  const auto croots = real_poly_roots(qreal);

  std::vector<OrbitClass> candidates;
  for (const auto& z : croots) {
    if (z.imag() < 0) continue;
    OrbitClass orbit{z.real(), std::abs(z.imag())};
    // flush real parts below rounding level so purely imaginary orbits
    // come out exact instead of carrying refinement dust
    if (std::abs(orbit.re) <= 1e-13 * (1.0 + orbit.r)) orbit.re = 0.0;
    bool dup = false;
    for (const auto& seen : candidates) dup = dup || orbit_close(seen, orbit);
    for (const auto& rep : reports) dup = dup || orbit_close(rep.orbit, orbit);
    if (!dup) candidates.push_back(orbit);
  }

  const double tol_rem = kRemRel * work.coeff_abs_sum();
  for (const auto& orbit : candidates) {
    const double real_gate = 1e-9 * (1.0 + std::abs(orbit.re));
    if (orbit.r <= real_gate) {
      const Quaternion z0(orbit.re);
      if (eval(work, z0).norm() <= kEvalRel * work.scale_at(z0)) {
        reports.push_back(
            {ZeroKind::real_isolated, z0, OrbitClass{orbit.re, 0.0}, true});
      }
      continue;
    }
    const auto div = divide_right_quadratic(work, orbit.re, orbit.r);
    const double rem = std::max(div.B.norm(), div.C.norm());
    const bool confident = rem <= 0.1 * tol_rem || rem >= 10.0 * tol_rem;
    if (rem <= tol_rem) {
      reports.push_back(
          {ZeroKind::spherical, orbit.representative(), orbit, confident});
      continue;
    }
    const Quaternion zi = -(inverse(div.B) * div.C);
    // double roots of the companion polynomial split by ~sqrt(eps), so a
    // real zero can surface here with a slightly non-real orbit
    if (zi.imag_norm() <= 1e-6 * (1.0 + zi.norm())) {
      const Quaternion zr(zi.real());
      if (eval(work, zr).norm() <= kEvalRel * work.scale_at(zr)) {
        bool dup = false;
        for (const auto& rep : reports)
          dup = dup || orbit_close(rep.orbit, OrbitClass{zr.real(), 0.0});
        if (!dup) {
          reports.push_back({ZeroKind::real_isolated, zr,
                             OrbitClass{zr.real(), 0.0}, confident});
        }
        continue;
      }
    }
    if (eval(work, zi).norm() <= kEvalRel * work.scale_at(zi)) {
      reports.push_back({ZeroKind::nonreal_isolated, zi, orbit, confident});
    }
  }
  return reports;
}

std::vector<ZeroReport> conjugate_zero_set(std::vector<ZeroReport> reports,
                                           const Quaternion& s) {
  const Quaternion si = inverse(s);
  for (auto& rep : reports) {
    if (rep.kind == ZeroKind::nonreal_isolated) {
      rep.representative = si * rep.representative * s;
      rep.orbit = orbit_of(rep.representative);
    }
  }
  return reports;
}

}  // namespace quatsamp
