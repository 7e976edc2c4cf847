#include "quatsamp/bvp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "quatsamp/errors.hpp"

namespace quatsamp {

namespace {
constexpr double kOrthTol = 1e-8;
constexpr double kOrbitTol = 1e-7;
}  // namespace

void BvpSpec::validate() const {
  if (N < 1) fail(errc::bad_input, "N must be positive");
  if (a.size() != static_cast<size_t>(N) ||
      b.size() != static_cast<size_t>(N) + 1) {
    fail(errc::bad_input, "need a(1..N) and b(0..N)");
  }
  for (size_t k = 0; k < b.size(); ++k) {
    if (b[k].norm() <= 1e-13 * std::max(1.0, b[k].norm())) {
      fail(errc::zero_division, "b(" + std::to_string(k) + ") is zero");
    }
  }
}

Quaternion PhiTable::coeff(int j, int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size()) || j < 0) return {};
  const auto& col = c_[static_cast<size_t>(k)];
  if (j >= static_cast<int>(col.size())) return {};
  return col[static_cast<size_t>(j)];
}

Quaternion PhiTable::phi(int k, const Quaternion& lambda,
                         const Quaternion& s) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) {
    fail(errc::bad_input, "phi index out of range");
  }
  const auto& col = c_[static_cast<size_t>(k)];
  Quaternion acc;
  Quaternion lp(1.0);
  for (const auto& cj : col) {
    acc += cj * s * lp;
    lp = lp * lambda;
  }
  return acc;
}

QVector PhiTable::phi_vector(const Quaternion& lambda,
                             const Quaternion& s) const {
  QVector out(static_cast<size_t>(N_));
  for (int k = 1; k <= N_; ++k) out[static_cast<size_t>(k - 1)] = phi(k, lambda, s);
  return out;
}

QPoly PhiTable::phi_poly(int k, const Quaternion& s) const {
  const auto& col = c_[static_cast<size_t>(k)];
  std::vector<Quaternion> coeffs(col.size());
  for (size_t j = 0; j < col.size(); ++j) coeffs[j] = col[j] * s;
  return QPoly(std::move(coeffs));
}

PhiTable build_phi(const BvpSpec& spec) {
  spec.validate();
  const int N = spec.N;
  std::vector<std::vector<Quaternion>> c(static_cast<size_t>(N) + 2);
  c[0] = {-spec.h1};
  c[1] = {Quaternion(1.0)};
  auto at = [&c](int j, int k) -> Quaternion {
    const auto& col = c[static_cast<size_t>(k)];
    return (j >= 0 && j < static_cast<int>(col.size()))
               ? col[static_cast<size_t>(j)]
               : Quaternion();
  };
  for (int k = 1; k <= N; ++k) {
    const Quaternion binv = inverse(spec.b_at(k));
    const Quaternion& bprev = spec.b_at(k - 1);
    const Quaternion& ak = spec.a_at(k);
    std::vector<Quaternion> next(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
      // lambda-multiplication is an index shift: phi(k)*lambda contributes
      // c(j-1,k) at power j
      const Quaternion t = at(j - 1, k) - ak * at(j, k) - bprev * at(j, k - 1);
      next[static_cast<size_t>(j)] = binv * t;
    }
    c[static_cast<size_t>(k) + 1] = std::move(next);
  }
  return PhiTable(N, std::move(c));
}

QPoly boundary_poly(const PhiTable& table, const BvpSpec& spec,
                    const Quaternion& s) {
  if (s.norm() <= 1e-13 * (1.0 + s.norm())) {
    fail(errc::zero_division, "boundary polynomial needs s != 0");
  }
  std::vector<Quaternion> coeffs(static_cast<size_t>(spec.N) + 1);
  for (int j = 0; j <= spec.N; ++j) {
    coeffs[static_cast<size_t>(j)] =
        (table.coeff(j, spec.N + 1) + spec.h2 * table.coeff(j, spec.N)) * s;
  }
  return QPoly(std::move(coeffs));
}

QMatrix build_L(const BvpSpec& spec) {
  spec.validate();
  std::vector<Quaternion> diag(static_cast<size_t>(spec.N));
  for (int k = 1; k <= spec.N; ++k) diag[static_cast<size_t>(k - 1)] = spec.a_at(k);
  if (spec.N == 1) {
    // the single row carries both boundary substitutions
    diag.front() = spec.a_at(1) - spec.b_at(0) * spec.h1 - spec.b_at(1) * spec.h2;
  } else {
    diag.front() = spec.a_at(1) - spec.b_at(0) * spec.h1;
    diag.back() = spec.a_at(spec.N) - spec.b_at(spec.N) * spec.h2;
  }
  std::vector<Quaternion> off(static_cast<size_t>(spec.N) - 1);
  for (int k = 1; k < spec.N; ++k) off[static_cast<size_t>(k - 1)] = spec.b_at(k);
  return QMatrix::tridiagonal(diag, off);
}

bool point_less(const Quaternion& a, const Quaternion& b) {
  const double eps = 1e-9 * (1.0 + a.norm() + b.norm());
  if (std::abs(a.real() - b.real()) > eps) return a.real() < b.real();
  const double ia = a.imag_norm();
  const double ib = b.imag_norm();
  if (std::abs(ia - ib) > eps) return ia < ib;
  // axis lexicographic, positive leading component first
  const double ax[3] = {ia > 0 ? a.x / ia : 0, ia > 0 ? a.y / ia : 0,
                        ia > 0 ? a.z / ia : 0};
  const double bx[3] = {ib > 0 ? b.x / ib : 0, ib > 0 ? b.y / ib : 0,
                        ib > 0 ? b.z / ib : 0};
  for (int m = 0; m < 3; ++m) {
    if (std::abs(ax[m] - bx[m]) > 1e-9) return ax[m] > bx[m];
  }
  return false;
}

namespace {

QPoly left_scaled(const QPoly& p, const Quaternion& q) {
  std::vector<Quaternion> c = p.coeffs();
  for (auto& x : c) x = q * x;
  return QPoly(std::move(c));
}

}  // namespace

std::vector<QPoly> interpolants(const std::vector<Quaternion>& points,
                                const std::vector<QVector>& basis,
                                const PhiTable& table, const Quaternion& s) {
  const int N = table.N();
  std::vector<QPoly> out;
  out.reserve(points.size());
  for (size_t k = 0; k < points.size(); ++k) {
    const QVector& v = basis[k];
    const double inv_n2 = 1.0 / (vec_norm(v) * vec_norm(v));
    std::vector<Quaternion> coeffs(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) {
      Quaternion acc;
      for (int m = 1; m <= N; ++m) {
        acc += v[static_cast<size_t>(m - 1)].conj() * table.coeff(j, m) * s;
      }
      coeffs[static_cast<size_t>(j)] = inv_n2 * acc;
    }
    out.push_back(QPoly(std::move(coeffs)));
  }

  // The basis vectors are orthogonal only to the accuracy of the computed
  // points, and the duality defect gets amplified by the spread of basis
  // norms. Newton-Schulz against the evaluation matrix E(k,l) = psi_k(p_l)
  // recombines the interpolants so that E becomes the identity to rounding.
  const size_t n = points.size();
  std::vector<Quaternion> inv(n * n);
  for (size_t k = 0; k < n; ++k) inv[k * n + k] = Quaternion(1.0);
  for (int step = 0; step < 3; ++step) {
    // X E evaluated through the combined polynomials
    std::vector<Quaternion> ex(n * n);
    for (size_t k = 0; k < n; ++k) {
      QPoly psi;
      for (size_t l = 0; l < n; ++l) {
        psi = psi + left_scaled(out[l], inv[k * n + l]);
      }
      for (size_t j = 0; j < n; ++j) ex[k * n + j] = eval(psi, points[j]);
    }
    // X <- (2I - X E) X squares the duality residual each step
    std::vector<Quaternion> next(n * n);
    for (size_t k = 0; k < n; ++k) {
      for (size_t j = 0; j < n; ++j) {
        Quaternion acc = 2.0 * inv[k * n + j];
        for (size_t l = 0; l < n; ++l) acc -= ex[k * n + l] * inv[l * n + j];
        next[k * n + j] = acc;
      }
    }
    inv = std::move(next);
  }
  std::vector<QPoly> fixed(n);
  for (size_t k = 0; k < n; ++k) {
    QPoly psi;
    for (size_t l = 0; l < n; ++l) {
      psi = psi + left_scaled(out[l], inv[k * n + l]);
    }
    fixed[k] = std::move(psi);
  }

  // distribute the leftover partition-of-unity defect evenly; it vanishes
  // at the sample points once duality holds, so this keeps psi_k(p_l) intact
  QPoly sum;
  for (const auto& psi : fixed) sum = sum + psi;
  const QPoly defect = sum - QPoly(std::vector<Quaternion>{Quaternion(1.0)});
  const Quaternion share(1.0 / static_cast<double>(n));
  for (auto& psi : fixed) psi = psi - left_scaled(defect, share);
  return fixed;
}

SamplingExpansion expansion_from_points(const PhiTable& table,
                                        const Quaternion& s,
                                        std::vector<Quaternion> points) {
  std::sort(points.begin(), points.end(), point_less);
  for (size_t j = 0; j + 1 < points.size(); ++j) {
    if ((points[j] - points[j + 1]).norm() <= 1e-6) {
      fail(errc::bad_input, "sample points must be pairwise distinct");
    }
  }
  SamplingExpansion exp;
  exp.s = s;
  exp.points = points;
  for (const auto& lam : points) exp.basis.push_back(table.phi_vector(lam, s));
  for (size_t j = 0; j < exp.basis.size(); ++j) {
    for (size_t k = j + 1; k < exp.basis.size(); ++k) {
      const double bound =
          kOrthTol * vec_norm(exp.basis[j]) * vec_norm(exp.basis[k]);
      if (inner(exp.basis[j], exp.basis[k]).norm() > bound) {
        fail(errc::orbit_selection_failure,
             "basis vectors for the given points are not orthogonal");
      }
    }
  }
  exp.interpolants = interpolants(exp.points, exp.basis, table, s);
  return exp;
}

SamplingExpansion sample_points_method1(const BvpSpec& spec,
                                        const Quaternion& s) {
  if (s.norm() == 0.0) fail(errc::zero_division, "s must be nonzero");
  const QMatrix L = build_L(spec);
  if (!is_normal(L, 1e-10)) {
    fail(errc::not_normal, "L is not normal; Method 1 requires normality");
  }
  const PhiTable table = build_phi(spec);
  auto pairs = right_eigen(L);

  std::vector<Quaternion> points;
  points.reserve(pairs.size());
  for (const auto& pr : pairs) {
    const Quaternion u1 = pr.vector.front();
    if (u1.norm() <= 1e-10) {
      fail(errc::first_entry_zero,
           "eigenvector first entry vanished; violates the nonzero-first-entry "
           "guarantee for tridiagonal L with nonzero b(k)");
    }
    const Quaternion t = inverse(u1) * s;
    points.push_back(inverse(t) * pr.value * t);
  }
  return expansion_from_points(table, s, std::move(points));
}

namespace {

/// <v, phi(., s)> as a polynomial in lambda (degree <= N-1).
QPoly inner_with_phi(const QVector& v, const PhiTable& table,
                     const Quaternion& s) {
  const int N = table.N();
  std::vector<Quaternion> coeffs(static_cast<size_t>(N));
  for (int j = 0; j < N; ++j) {
    Quaternion acc;
    for (int m = 1; m <= N; ++m)
      acc += v[static_cast<size_t>(m - 1)].conj() * table.coeff(j, m) * s;
    coeffs[static_cast<size_t>(j)] = acc;
  }
  return QPoly(std::move(coeffs));
}

bool orbit_close(const OrbitClass& a, const OrbitClass& b) {
  return std::abs(a.re - b.re) + std::abs(a.r - b.r) <=
         kOrbitTol * (1.0 + std::abs(a.re) + a.r);
}

struct Vec3 {
  double x, y, z;
};

Vec3 normalize3(Vec3 v) {
  const double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  return {v.x / n, v.y / n, v.z / n};
}

/// Unit sphere directions from an icosahedron subdivided `levels` times.
std::vector<Vec3> icosphere_directions(int levels) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& v : verts) v = normalize3(v);
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int lvl = 0; lvl < levels; ++lvl) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec3 m = normalize3({(verts[a].x + verts[b].x) / 2,
                           (verts[a].y + verts[b].y) / 2,
                           (verts[a].z + verts[b].z) / 2});
      verts.push_back(m);
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoint[key] = idx;
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]);
      const int bc = mid(f[1], f[2]);
      const int ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  return verts;
}

Quaternion orbit_point(const OrbitClass& orbit, const Vec3& dir) {
  return {orbit.re, orbit.r * dir.x, orbit.r * dir.y, orbit.r * dir.z};
}

/// Sum of squared inner products against the already-fixed unit directions.
double orth_objective(const std::vector<QVector>& fixed, const QVector& v) {
  double obj = 0.0;
  for (const auto& u : fixed) {
    const Quaternion ip = inner(u, v);
    obj += ip.norm_sq();
  }
  return obj;
}

/// Dense orbit search: icosahedral grid with two refinement levels followed
/// by a shrinking tangent-step descent around the best vertex.
Quaternion orbit_grid_search(const PhiTable& table, const Quaternion& s,
                             const OrbitClass& orbit,
                             const std::vector<QVector>& fixed,
                             const std::vector<Quaternion>& taken) {
  auto admissible = [&](const Quaternion& cand) {
    for (const auto& p : taken)
      if ((p - cand).norm() <= 1e-6) return false;
    return true;
  };
  double best_obj = -1.0;
  Vec3 best_dir{0, 0, 1};
  for (const auto& dir : icosphere_directions(2)) {
    const Quaternion cand = orbit_point(orbit, dir);
    if (!admissible(cand)) continue;
    const double obj = orth_objective(fixed, table.phi_vector(cand, s));
    if (best_obj < 0 || obj < best_obj) {
      best_obj = obj;
      best_dir = dir;
    }
  }
  double step = 0.3;
  for (int it = 0; it < 60; ++it) {
    bool moved = false;
    const Vec3 axes[6] = {{step, 0, 0},  {-step, 0, 0}, {0, step, 0},
                          {0, -step, 0}, {0, 0, step},  {0, 0, -step}};
    for (const auto& d : axes) {
      const Vec3 trial = normalize3(
          {best_dir.x + d.x, best_dir.y + d.y, best_dir.z + d.z});
      const Quaternion cand = orbit_point(orbit, trial);
      if (!admissible(cand)) continue;
      const double obj = orth_objective(fixed, table.phi_vector(cand, s));
      if (obj < best_obj) {
        best_obj = obj;
        best_dir = trial;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
    if (step < 1e-12) break;
  }
  const Quaternion cand = orbit_point(orbit, best_dir);
  const QVector v = table.phi_vector(cand, s);
  for (const auto& u : fixed) {
    if (inner(u, v).norm() > kOrthTol * vec_norm(u) * vec_norm(v)) {
      fail(errc::orbit_selection_failure,
           "no in-orbit point orthogonal to the fixed basis was found");
    }
  }
  return cand;
}

/// Picks `count` orthogonal sample points inside one spherical orbit via the
/// iterative orthogonality procedure.
std::vector<Quaternion> fill_orbit(const PhiTable& table, const Quaternion& s,
                                   const OrbitClass& orbit,
                                   const Quaternion& seed, size_t count) {
  std::vector<Quaternion> pts = {seed};
  std::vector<QVector> vecs = {table.phi_vector(seed, s)};
  while (pts.size() < count) {
    const QPoly g = inner_with_phi(vecs.back(), table, s);
    std::vector<Quaternion> candidates;
    bool whole_orbit = false;
    for (const auto& rep : g.degree() >= 1 ? zeros(g)
                                           : std::vector<ZeroReport>{}) {
      if (rep.kind == ZeroKind::spherical && orbit_close(rep.orbit, orbit)) {
        whole_orbit = true;
      } else if (orbit.contains(rep.representative,
                                kOrbitTol * (1.0 + std::abs(orbit.re) + orbit.r))) {
        candidates.push_back(rep.representative);
      }
    }
    std::sort(candidates.begin(), candidates.end(), point_less);
    bool placed = false;
    for (const auto& cand : candidates) {
      bool ok = true;
      for (const auto& p : pts) ok = ok && (p - cand).norm() > 1e-6;
      const QVector v = table.phi_vector(cand, s);
      for (const auto& u : vecs)
        ok = ok && inner(u, v).norm() <= kOrthTol * vec_norm(u) * vec_norm(v);
      if (ok) {
        pts.push_back(cand);
        vecs.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      (void)whole_orbit;
      const Quaternion cand = orbit_grid_search(table, s, orbit, vecs, pts);
      pts.push_back(cand);
      vecs.push_back(table.phi_vector(cand, s));
    }
  }
  return pts;
}

}  // namespace

SamplingExpansion sample_points_method2(const BvpSpec& spec,
                                        const Quaternion& s) {
  if (s.norm() == 0.0) fail(errc::zero_division, "s must be nonzero");
  const QMatrix L = build_L(spec);
  if (!is_normal(L, 1e-10)) {
    fail(errc::not_normal, "L is not normal; Method 2 requires normality");
  }
  const PhiTable table = build_phi(spec);
  const QPoly p = boundary_poly(table, spec, s);
  const auto reports = zeros(p);

  // standard eigenvalues of L give the point count per zero orbit
  const auto pairs = right_eigen(L);
  std::vector<Quaternion> points;
  size_t assigned = 0;
  for (const auto& rep : reports) {
    size_t mult = 0;
    for (const auto& pr : pairs) {
      if (orbit_close(orbit_of(pr.value), rep.orbit)) ++mult;
    }
    if (mult == 0) continue;  // spurious candidate orbit
    assigned += mult;
    if (mult == 1) {
      points.push_back(rep.representative);
      continue;
    }
    if (rep.kind != ZeroKind::spherical) {
      fail(errc::orbit_selection_failure,
           "an isolated zero orbit cannot host " + std::to_string(mult) +
               " orthogonal sample points");
    }
    const auto filled =
        fill_orbit(table, s, rep.orbit, rep.representative, mult);
    points.insert(points.end(), filled.begin(), filled.end());
  }
  if (assigned != static_cast<size_t>(spec.N)) {
    fail(errc::spectrum_mismatch,
         "zero orbits of p_N do not cover the spectrum of L");
  }
  return expansion_from_points(table, s, std::move(points));
}

Quaternion transform(const TransformCoeffs& F, const PhiTable& table,
                     const Quaternion& s, const Quaternion& lambda) {
  if (F.size() != static_cast<size_t>(table.N())) {
    fail(errc::dimension_mismatch, "transform coefficients must have length N");
  }
  Quaternion acc;
  for (int k = 1; k <= table.N(); ++k) {
    acc += F[static_cast<size_t>(k - 1)].conj() * table.phi(k, lambda, s);
  }
  return acc;
}

Quaternion reconstruct(const std::vector<Quaternion>& samples,
                       const SamplingExpansion& exp, const Quaternion& lambda) {
  if (samples.size() != exp.points.size()) {
    fail(errc::dimension_mismatch, "need one sample per point");
  }
  Quaternion acc;
  for (size_t k = 0; k < samples.size(); ++k) {
    acc += samples[k] * eval(exp.interpolants[k], lambda);
  }
  return acc;
}

SamplingExpansion alternate_expansion(const SamplingExpansion& exp,
                                      const BvpSpec& spec,
                                      const PhiTable& table,
                                      const OrbitClass& orbit,
                                      const Quaternion& seed) {
  const double otol = kOrbitTol * (1.0 + std::abs(orbit.re) + orbit.r);
  if (!orbit.contains(seed, otol)) {
    fail(errc::bad_input, "seed point is not inside the requested orbit");
  }
  const QPoly p = boundary_poly(table, spec, exp.s);
  bool spherical = false;
  for (const auto& rep : zeros(p)) {
    if (rep.kind == ZeroKind::spherical && orbit_close(rep.orbit, orbit)) {
      spherical = true;
    }
  }
  if (!spherical) {
    fail(errc::not_spherical,
         "requested orbit is not a spherical zero of the boundary polynomial");
  }

  std::vector<Quaternion> kept;
  size_t in_orbit = 0;
  for (const auto& pt : exp.points) {
    if (orbit.contains(pt, otol)) {
      ++in_orbit;
    } else {
      kept.push_back(pt);
    }
  }
  std::vector<Quaternion> rebuilt =
      in_orbit <= 1 ? std::vector<Quaternion>{seed}
                    : fill_orbit(table, exp.s, orbit, seed, in_orbit);
  kept.insert(kept.end(), rebuilt.begin(), rebuilt.end());
  return expansion_from_points(table, exp.s, std::move(kept));
}

}  // namespace quatsamp
