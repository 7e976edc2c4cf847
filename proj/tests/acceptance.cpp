// Acceptance gate: ten fixed checks over golden values and randomized
// property suites.  Prints one PASS/FAIL line per criterion and exits with
// the number of failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "quatsamp/bvp.hpp"
#include "quatsamp/charpoly.hpp"
#include "quatsamp/generators.hpp"
#include "quatsamp/qmatrix.hpp"
#include "quatsamp/qpoly.hpp"
#include "quatsamp/quaternion.hpp"

using namespace quatsamp;
using fixtures::I;
using fixtures::J;
using fixtures::K;
using fixtures::SQ3;
using fixtures::qclose;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what);
  if (!ok) ++failures;
}

bool poly_close(const QPoly& p, const std::vector<Quaternion>& expect,
                double tol) {
  for (size_t m = 0; m < std::max(p.coeffs().size(), expect.size()); ++m) {
    const Quaternion e = m < expect.size() ? expect[m] : Quaternion();
    if (!qclose(p.coeff(m), e, tol)) return false;
  }
  return true;
}

const QPoly* interpolant_at(const SamplingExpansion& exp, const Quaternion& pt,
                            double tol) {
  for (size_t m = 0; m < exp.points.size(); ++m) {
    if (qclose(exp.points[m], pt, tol)) return &exp.interpolants[m];
  }
  return nullptr;
}

// 1. recurrence coefficients of the twisted second-difference problem
bool criterion1() {
  const PhiTable t = build_phi(fixtures::tridiag_ij_spec());
  return qclose(t.coeff(0, 2), -K, 1e-12) && qclose(t.coeff(1, 2), I, 1e-12) &&
         poly_close(t.phi_poly(3, Quaternion(1)),
                    {Quaternion(-2), Quaternion(), Quaternion(-1)}, 1e-12) &&
         poly_close(t.phi_poly(4, Quaternion(1)),
                    {3.0 * K, -3.0 * I, K, -I}, 1e-12);
}

// 2. zero classification of the cubic boundary polynomial at s = 1+k
bool criterion2() {
  const BvpSpec spec = fixtures::tridiag_ij_spec();
  const QPoly p = boundary_poly(build_phi(spec), spec, Quaternion(1) + K);
  const auto zs = zeros(p);
  if (zs.size() != 2) return false;
  bool iso = false, sph = false;
  for (const auto& z : zs) {
    if (z.kind == ZeroKind::nonreal_isolated &&
        (z.representative - I).norm() <= 1e-9) {
      iso = true;
    }
    if (z.kind == ZeroKind::spherical && std::abs(z.orbit.re) <= 1e-9 &&
        std::abs(z.orbit.r - SQ3) <= 1e-9) {
      sph = true;
    }
  }
  return iso && sph;
}

// 3. interpolants for both published point sets of the same problem
bool criterion3() {
  const BvpSpec spec = fixtures::tridiag_ij_spec();
  const PhiTable table = build_phi(spec);
  const Quaternion s1 = Quaternion(1) + K;

  const SamplingExpansion e1 = expansion_from_points(
      table, s1, {I, -SQ3 * J, (3.0 * I + SQ3 * J) / 2.0});
  const QPoly* p1 = interpolant_at(e1, I, 1e-12);
  const QPoly* p2 = interpolant_at(e1, -SQ3 * J, 1e-12);
  const QPoly* p3 = interpolant_at(e1, (3.0 * I + SQ3 * J) / 2.0, 1e-12);
  if (!p1 || !p2 || !p3) return false;
  bool ok =
      poly_close(*p1, {Quaternion(1.5), Quaternion(), Quaternion(0.5)}, 1e-9) &&
      poly_close(*p2,
                 {(SQ3 / 6.0) * K, (I + SQ3 * J) / 6.0, Quaternion(-1.0 / 6.0)},
                 1e-9) &&
      poly_close(*p3,
                 {(Quaternion(-3) - SQ3 * K) / 6.0, -(I + SQ3 * J) / 6.0,
                  Quaternion(-1.0 / 3.0)},
                 1e-9);

  const SamplingExpansion e2 = sample_points_method2(spec, s1);
  const QPoly* q1 = interpolant_at(e2, I, 1e-9);
  const QPoly* q2 = interpolant_at(e2, SQ3 * I, 1e-9);
  const QPoly* q3 = interpolant_at(e2, -SQ3 * I, 1e-9);
  if (!q1 || !q2 || !q3) return false;
  ok = ok &&
       poly_close(*q1, {Quaternion(1.5), Quaternion(), Quaternion(0.5)}, 1e-9) &&
       poly_close(*q2,
                  {Quaternion(-3.0 * (1.0 + SQ3) / 12.0),
                   (-2.0 * SQ3 / 12.0) * I, Quaternion(-(3.0 + SQ3) / 12.0)},
                  1e-9) &&
       poly_close(*q3,
                  {Quaternion(3.0 * (SQ3 - 1.0) / 12.0), (2.0 * SQ3 / 12.0) * I,
                   Quaternion((SQ3 - 3.0) / 12.0)},
                  1e-9);
  return ok;
}

// 4. zero set and interpolants of the mixed-coefficient problem
bool criterion4() {
  const BvpSpec spec = fixtures::mixed_coeff_spec();
  const PhiTable table = build_phi(spec);
  const Quaternion s1 = -K;
  const auto zs = zeros(boundary_poly(table, spec, s1));
  const Quaternion expect[3] = {-I - J, -I + 2.0 * J, -I - 3.0 * J};
  if (zs.size() != 3) return false;
  for (const auto& e : expect) {
    bool found = false;
    for (const auto& z : zs) {
      if (z.kind == ZeroKind::nonreal_isolated &&
          (z.representative - e).norm() <= 1e-9) {
        found = true;
      }
    }
    if (!found) return false;
  }
  const SamplingExpansion exp = sample_points_method2(spec, s1);
  const QPoly* p1 = interpolant_at(exp, expect[0], 1e-8);
  const QPoly* p2 = interpolant_at(exp, expect[1], 1e-8);
  const QPoly* p3 = interpolant_at(exp, expect[2], 1e-8);
  if (!p1 || !p2 || !p3) return false;
  return poly_close(*p1,
                    {(Quaternion(7) - K) / 6.0, J / 6.0, Quaternion(1.0 / 6.0)},
                    1e-9) &&
         poly_close(*p2,
                    {(Quaternion(2) + 4.0 * K) / 15.0, (-4.0 / 15.0) * J,
                     Quaternion(-1.0 / 15.0)},
                    1e-9) &&
         poly_close(*p3,
                    {(Quaternion(-3) - K) / 10.0, J / 10.0,
                     Quaternion(-1.0 / 10.0)},
                    1e-9);
}

// 5. published eigenvalue table of the mixed tridiagonal matrix
bool criterion5() {
  const QMatrix A = fixtures::mixed_tridiag_matrix();
  const Quaternion lam[4] = {
      Quaternion(-1.12826, 0.544285, 0, 0), Quaternion(-0.208978, 0.611905, 0, 0),
      Quaternion(1.03613, 1.13233, 0, 0), Quaternion(1.3011, 2.0323, 0, 0)};
  const Quaternion ztab[4] = {
      Quaternion(-1.12826, -0.378569, 0.22245, -0.321633),
      Quaternion(-0.208978, -0.433043, 0.412505, 0.129384),
      Quaternion(1.03613, 1.08041, 0.0906333, 0.326603),
      Quaternion(1.3011, 1.8469, 0.0828995, 0.843984)};

  const auto pairs = right_eigen(A);
  if (pairs.size() != 4) return false;
  for (const auto& l : lam) {
    bool found = false;
    for (const auto& p : pairs)
      if ((p.value - l).norm() <= 1e-4) found = true;
    if (!found) return false;
  }

  const auto res = spectrum_check(A, Quaternion(1));
  if (res.zero_classes.size() != 4) return false;
  for (const auto& z : ztab) {
    bool found = false;
    for (const auto& zc : res.zero_classes) {
      if (std::abs(zc.orbit.re - z.real()) <= 1e-4 &&
          std::abs(zc.orbit.r - z.imag_norm()) <= 1e-4) {
        found = true;
      }
    }
    if (!found) return false;
  }
  for (int m = 0; m < 4; ++m) {
    if (!is_similar(ztab[m], lam[m], 2e-4)) return false;
  }
  return true;
}

// 6. reconstruction, duality and partition of unity on random normal specs
bool criterion6() {
  std::mt19937_64 rng(1006);
  for (int t = 0; t < 50; ++t) {
    const int N = 2 + static_cast<int>(rng() % 7);
    const BvpSpec spec = random_normal_spec(rng, N);
    const Quaternion s = random_nonzero_quaternion(rng);
    const PhiTable table = build_phi(spec);
    const SamplingExpansion exp = sample_points_method1(spec, s);

    for (size_t kk = 0; kk < exp.points.size(); ++kk) {
      for (size_t jj = 0; jj < exp.points.size(); ++jj) {
        const Quaternion v = eval(exp.interpolants[kk], exp.points[jj]);
        const Quaternion want = kk == jj ? Quaternion(1) : Quaternion();
        if ((v - want).norm() > 1e-9) return false;
      }
    }
    QPoly sum;
    for (const auto& psi : exp.interpolants) sum = sum + psi;
    if (!poly_close(sum, {Quaternion(1)}, 1e-10)) return false;

    for (int rep = 0; rep < 100; ++rep) {
      TransformCoeffs F;
      for (int m = 0; m < N; ++m) F.push_back(random_quaternion(rng));
      std::vector<Quaternion> samples;
      double scale = 1.0;
      for (const auto& p : exp.points) {
        samples.push_back(transform(F, table, s, p));
        scale = std::max(scale, samples.back().norm());
      }
      const Quaternion lambda = random_quaternion(rng, 1.5);
      const Quaternion direct = transform(F, table, s, lambda);
      const Quaternion rebuilt = reconstruct(samples, exp, lambda);
      if ((direct - rebuilt).norm() > 1e-8 * std::max(scale, direct.norm())) {
        return false;
      }
    }
  }
  return true;
}

// 7. solution family equivalence and twist conjugation on random specs
bool criterion7() {
  std::mt19937_64 rng(1007);
  for (int t = 0; t < 50; ++t) {
    const int N = 2 + static_cast<int>(rng() % 7);
    const BvpSpec spec = random_normal_spec(rng, N);
    const Quaternion s = random_nonzero_quaternion(rng);
    const PhiTable table = build_phi(spec);
    const QMatrix L = build_L(spec);
    const SamplingExpansion exp = sample_points_method1(spec, s);
    const QPoly pN = boundary_poly(table, spec, s);
    const double lnorm = std::max(L.frobenius(), 1.0);
    for (size_t m = 0; m < exp.points.size(); ++m) {
      const Quaternion lk = exp.points[m];
      const QVector& x = exp.basis[m];
      const double xs = std::max(vec_norm(x), 1.0);
      if (vec_norm(L * x - x * lk) > 1e-9 * xs * lnorm) return false;
      if (eval(pN, lk).norm() > 1e-8 * pN.scale_at(lk)) return false;
      QVector pad;
      pad.push_back(-(spec.h1 * x[0]));
      for (const auto& e : x) pad.push_back(e);
      pad.push_back(-(spec.h2 * x.back()));
      for (int k = 1; k <= N; ++k) {
        const Quaternion lhs =
            spec.b_at(k) * pad[static_cast<size_t>(k + 1)] +
            spec.a_at(k) * pad[static_cast<size_t>(k)] +
            spec.b_at(k - 1) * pad[static_cast<size_t>(k - 1)];
        if ((lhs - pad[static_cast<size_t>(k)] * lk).norm() >
            1e-9 * (1.0 + xs * lnorm)) {
          return false;
        }
      }
    }
    // conjugating a zero and the twist carries solutions across
    const Quaternion s1 = random_nonzero_quaternion(rng);
    const Quaternion lam0 = exp.points[rng() % exp.points.size()];
    const QVector lhs = table.phi_vector(lam0, s) * s1;
    const QVector rhs = table.phi_vector(inverse(s1) * lam0 * s1, s * s1);
    if (vec_norm(lhs - rhs) > 1e-10 * std::max(vec_norm(lhs), 1.0)) return false;
  }
  return true;
}

// 8. componentwise normality criterion vs the direct test
bool criterion8() {
  std::mt19937_64 rng(1008);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const QMatrix A = (t % 2 == 0) ? random_symmetric(rng, n)
                                   : random_normal_symmetric(rng, n);
    if (is_normal(A, 1e-10) != normality_by_parts(A, 1e-10)) return false;
  }
  return true;
}

// 9. zero-set conjugation under right twists of the coefficients
bool criterion9() {
  std::mt19937_64 rng(1009);
  for (int t = 0; t < 100; ++t) {
    const int deg = 1 + static_cast<int>(rng() % 6);
    std::vector<Quaternion> base;
    for (int k = 0; k < deg; ++k) base.push_back(random_quaternion(rng, 2.0));
    base.push_back(random_nonzero_quaternion(rng, 2.0));
    const Quaternion s1 = random_nonzero_quaternion(rng, 2.0);
    const Quaternion s2 = random_nonzero_quaternion(rng, 2.0);
    std::vector<Quaternion> c1, c2;
    for (const auto& c : base) {
      c1.push_back(c * s1);
      c2.push_back(c * s2);
    }
    const auto za = conjugate_zero_set(zeros(QPoly(c1)), inverse(s1) * s2);
    const auto zb = zeros(QPoly(c2));
    if (za.size() != zb.size()) return false;
    for (const auto& a : za) {
      const double tol = 1e-6 * (1.0 + a.representative.norm());
      bool found = false;
      for (const auto& b : zb) {
        if (b.kind != a.kind) continue;
        if (a.kind == ZeroKind::spherical
                ? b.orbit.contains(a.representative, tol)
                : (b.representative - a.representative).norm() <= tol) {
          found = true;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

// 10. complex adjoint multiplicativity and eigen residuals
bool criterion10() {
  std::mt19937_64 rng(1010);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const QMatrix A = random_qmatrix(rng, n, n);
    const QMatrix B = random_qmatrix(rng, n, n);
    const ComplexMatrix lhs = complex_adjoint(A * B);
    const ComplexMatrix rhs = complex_adjoint(A) * complex_adjoint(B);
    if ((lhs - rhs).frobenius() > 1e-10 * (1.0 + lhs.frobenius())) return false;

    const double scale = std::max(A.frobenius(), 1.0);
    for (const auto& p : right_eigen(A)) {
      if (vec_norm(A * p.vector - p.vector * p.value) > 1e-9 * scale) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  report(1, "recurrence coefficients of the twisted second-difference problem",
         criterion1());
  report(2, "zero classification of its cubic boundary polynomial",
         criterion2());
  report(3, "interpolants for both published point sets", criterion3());
  report(4, "zero set and interpolants of the mixed-coefficient problem",
         criterion4());
  report(5, "eigenvalue table of the mixed tridiagonal matrix", criterion5());
  report(6, "reconstruction, duality and partition of unity", criterion6());
  report(7, "solution family equivalence and twist conjugation", criterion7());
  report(8, "componentwise normality criterion vs direct test", criterion8());
  report(9, "zero-set conjugation under coefficient twists", criterion9());
  report(10, "complex adjoint multiplicativity and eigen residuals",
         criterion10());
  return failures;
}
