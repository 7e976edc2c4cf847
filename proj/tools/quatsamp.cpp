// quatsamp: sampling expansions, zero finding and right spectra for
// quaternion difference equations.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quatsamp/bvp.hpp"
#include "quatsamp/charpoly.hpp"
#include "quatsamp/errors.hpp"
#include "quatsamp/format.hpp"
#include "quatsamp/generators.hpp"
#include "quatsamp/io.hpp"
#include "quatsamp/qmatrix.hpp"
#include "quatsamp/qpoly.hpp"

using namespace quatsamp;
// insertion-ordered objects keep the TSV column order stable
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string s_literal;
  int method = 1;
  int digits = 6;
  bool json_out = false;
  unsigned long long seed = 1;
};

struct Printer {
  const Options& opt;

  std::string fq(const Quaternion& q) const {
    return format_quaternion(q, opt.digits);
  }
  std::string fr(double v) const { return format_real(v, opt.digits); }

  void header(const std::vector<std::string>& cols) const {
    if (opt.json_out) return;
    for (size_t m = 0; m < cols.size(); ++m) {
      std::printf("%s%s", m ? "\t" : "", cols[m].c_str());
    }
    std::printf("\n");
  }

  void row(const json& obj) const {
    if (opt.json_out) {
      std::printf("%s\n", obj.dump().c_str());
      return;
    }
    bool first = true;
    for (const auto& [key, value] : obj.items()) {
      (void)key;
      const std::string cell =
          value.is_string() ? value.get<std::string>() : value.dump();
      std::printf("%s%s", first ? "" : "\t", cell.c_str());
      first = false;
    }
    std::printf("\n");
  }
};

std::string join_quaternions(const Printer& pr, const QVector& v) {
  std::string out;
  for (size_t m = 0; m < v.size(); ++m) {
    if (m) out += " ";
    out += pr.fq(v[m]);
  }
  return out;
}

const std::string& single_input(const Options& opt) {
  if (opt.inputs.size() != 1) {
    fail(errc::bad_input, "this command takes exactly one --input file");
  }
  return opt.inputs.front();
}

int cmd_roots(const Options& opt) {
  const Printer pr{opt};
  const QPoly p = read_poly_file(single_input(opt));
  pr.header({"kind", "representative", "re", "r", "confident"});
  for (const auto& z : zeros(p)) {
    pr.row(json{{"kind", zero_kind_name(z.kind)},
                {"representative", pr.fq(z.representative)},
                {"re", pr.fr(z.orbit.re)},
                {"r", pr.fr(z.orbit.r)},
                {"confident", z.confident ? "yes" : "no"}});
  }
  return 0;
}

int cmd_eig(const Options& opt) {
  const Printer pr{opt};
  const QMatrix A = read_matrix_file(single_input(opt));
  if (A.rows() != A.cols()) {
    fail(errc::dimension_mismatch, "eig needs a square matrix");
  }
  pr.header({"value", "residual"});
  for (const auto& e : right_eigen(A)) {
    const double res = vec_norm(A * e.vector - e.vector * e.value);
    pr.row(json{{"value", pr.fq(e.value)}, {"residual", pr.fr(res)}});
  }
  return 0;
}

int cmd_normal_check(const Options& opt) {
  const Printer pr{opt};
  const QMatrix A = read_matrix_file(single_input(opt));
  pr.header({"test", "normal"});
  const bool direct = is_normal(A, 1e-10);
  pr.row(json{{"test", "direct"}, {"normal", direct ? "yes" : "no"}});
  const QMatrix d = A - A.transpose_nonconj();
  if (d.frobenius() <= 1e-12 * std::max(1.0, A.frobenius())) {
    const bool parts = normality_by_parts(A, 1e-10);
    pr.row(json{{"test", "componentwise"}, {"normal", parts ? "yes" : "no"}});
  } else {
    pr.row(json{{"test", "componentwise"}, {"normal", "n/a"}});
  }
  return 0;
}

int cmd_charpoly(const Options& opt) {
  const Printer pr{opt};
  const QMatrix A = read_matrix_file(single_input(opt));
  const Quaternion s =
      opt.s_literal.empty() ? Quaternion(1) : parse_quaternion(opt.s_literal);
  const CharPolyResult res = spectrum_check(A, s);
  pr.header({"record", "index", "kind", "value", "re", "r"});
  for (size_t m = 0; m < res.poly.coeffs().size(); ++m) {
    pr.row(json{{"record", "coeff"},
                {"index", pr.fr(static_cast<double>(m))},
                {"kind", ""},
                {"value", pr.fq(res.poly.coeff(m))},
                {"re", ""},
                {"r", ""}});
  }
  int idx = 0;
  for (const auto& z : res.zero_classes) {
    pr.row(json{{"record", "zero"},
                {"index", pr.fr(idx++)},
                {"kind", zero_kind_name(z.kind)},
                {"value", pr.fq(z.representative)},
                {"re", pr.fr(z.orbit.re)},
                {"r", pr.fr(z.orbit.r)}});
  }
  idx = 0;
  for (const auto& o : res.spectrum_classes) {
    pr.row(json{{"record", "eigenorbit"},
                {"index", pr.fr(idx++)},
                {"kind", ""},
                {"value", pr.fq(o.representative())},
                {"re", pr.fr(o.re)},
                {"r", pr.fr(o.r)}});
  }
  pr.row(json{{"record", "crosscheck"},
              {"index", ""},
              {"kind", ""},
              {"value", "ok"},
              {"re", ""},
              {"r", ""}});
  return 0;
}

int cmd_sample(const Options& opt) {
  const Printer pr{opt};
  const BvpFile f = read_bvp_file(single_input(opt));
  const Quaternion s =
      opt.s_literal.empty() ? f.s : parse_quaternion(opt.s_literal);
  const SamplingExpansion exp = opt.method == 1
                                    ? sample_points_method1(f.spec, s)
                                    : sample_points_method2(f.spec, s);
  pr.header({"record", "index", "values"});
  for (size_t m = 0; m < exp.points.size(); ++m) {
    pr.row(json{{"record", "point"},
                {"index", pr.fr(static_cast<double>(m + 1))},
                {"values", pr.fq(exp.points[m])}});
  }
  for (size_t m = 0; m < exp.basis.size(); ++m) {
    pr.row(json{{"record", "basis"},
                {"index", pr.fr(static_cast<double>(m + 1))},
                {"values", join_quaternions(pr, exp.basis[m])}});
  }
  for (size_t m = 0; m < exp.interpolants.size(); ++m) {
    pr.row(json{{"record", "interpolant"},
                {"index", pr.fr(static_cast<double>(m + 1))},
                {"values", join_quaternions(pr, exp.interpolants[m].coeffs())}});
  }
  return 0;
}

int cmd_reconstruct(const Options& opt) {
  const Printer pr{opt};
  if (opt.inputs.size() != 2) {
    fail(errc::bad_input,
         "reconstruct takes --input SPEC --input DATA (transform coefficients "
         "on the first data line, then test points)");
  }
  const BvpFile f = read_bvp_file(opt.inputs[0]);
  const Quaternion s =
      opt.s_literal.empty() ? f.s : parse_quaternion(opt.s_literal);

  std::ifstream data(opt.inputs[1]);
  if (!data) fail(errc::bad_input, "cannot open '" + opt.inputs[1] + "'");
  TransformCoeffs F;
  std::vector<Quaternion> lambdas;
  std::string line;
  while (std::getline(data, line)) {
    const auto items = parse_quaternion_list(line);
    if (items.empty()) continue;
    if (F.empty()) {
      F = items;
    } else {
      lambdas.insert(lambdas.end(), items.begin(), items.end());
    }
  }
  if (F.empty()) fail(errc::bad_input, "data file has no transform coefficients");
  if (lambdas.empty()) fail(errc::bad_input, "data file has no test points");

  const PhiTable table = build_phi(f.spec);
  const SamplingExpansion exp = opt.method == 1
                                    ? sample_points_method1(f.spec, s)
                                    : sample_points_method2(f.spec, s);
  std::vector<Quaternion> samples;
  for (const auto& p : exp.points) samples.push_back(transform(F, table, s, p));

  pr.header({"lambda", "transform", "reconstruction", "error"});
  for (const auto& lam : lambdas) {
    const Quaternion direct = transform(F, table, s, lam);
    const Quaternion rebuilt = reconstruct(samples, exp, lam);
    pr.row(json{{"lambda", pr.fq(lam)},
                {"transform", pr.fq(direct)},
                {"reconstruction", pr.fq(rebuilt)},
                {"error", pr.fr((direct - rebuilt).norm())}});
  }
  return 0;
}

// ---- verify: golden examples plus seeded random trials ----

bool verify_recurrence() {
  BvpSpec spec;
  spec.N = 3;
  spec.a = {Quaternion::j(), Quaternion::j(), Quaternion::j()};
  spec.b = {-Quaternion::i(), -Quaternion::i(), -Quaternion::i(),
            -Quaternion::i()};
  const PhiTable t = build_phi(spec);
  const Quaternion expect2[] = {-Quaternion::k(), Quaternion::i()};
  const Quaternion expect3[] = {Quaternion(-2), Quaternion(), Quaternion(-1)};
  const Quaternion expect4[] = {3.0 * Quaternion::k(), -3.0 * Quaternion::i(),
                                Quaternion::k(), -Quaternion::i()};
  for (int j = 0; j < 2; ++j)
    if ((t.coeff(j, 2) - expect2[j]).norm() > 1e-12) return false;
  for (int j = 0; j < 3; ++j)
    if ((t.coeff(j, 3) - expect3[j]).norm() > 1e-12) return false;
  for (int j = 0; j < 4; ++j)
    if ((t.coeff(j, 4) - expect4[j]).norm() > 1e-12) return false;
  return true;
}

bool verify_cubic_zeros() {
  BvpSpec spec;
  spec.N = 3;
  spec.a = {Quaternion::j(), Quaternion::j(), Quaternion::j()};
  spec.b = {-Quaternion::i(), -Quaternion::i(), -Quaternion::i(),
            -Quaternion::i()};
  const Quaternion s1 = Quaternion(1) + Quaternion::k();
  const auto zs = zeros(boundary_poly(build_phi(spec), spec, s1));
  if (zs.size() != 2) return false;
  bool iso = false, sph = false;
  const double sq3 = std::sqrt(3.0);
  for (const auto& z : zs) {
    if (z.kind == ZeroKind::nonreal_isolated &&
        (z.representative - Quaternion::i()).norm() <= 1e-9) {
      iso = true;
    }
    if (z.kind == ZeroKind::spherical && std::abs(z.orbit.re) <= 1e-9 &&
        std::abs(z.orbit.r - sq3) <= 1e-9) {
      sph = true;
    }
  }
  return iso && sph;
}

bool verify_mixed_expansion() {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(),
                   k = Quaternion::k();
  const double sq3 = std::sqrt(3.0);
  BvpSpec spec;
  spec.N = 3;
  spec.a = {j, i, -k};
  spec.b = {i + j, sq3 * j, j - k, Quaternion(1) + j};
  spec.h1 = -k;
  spec.h2 = -i;
  const SamplingExpansion exp = sample_points_method2(spec, -k);
  if (exp.points.size() != 3) return false;
  const Quaternion expect[] = {-i - j, -i + 2.0 * j, -i - 3.0 * j};
  for (int m = 0; m < 3; ++m) {
    if ((exp.points[static_cast<size_t>(m)] - expect[m]).norm() > 1e-8) {
      return false;
    }
  }
  // first interpolant: (lambda^2 + j lambda + 7 - k) / 6
  const QPoly& psi1 = exp.interpolants[0];
  return (psi1.coeff(0) - (Quaternion(7) - k) / 6.0).norm() <= 1e-9 &&
         (psi1.coeff(1) - j / 6.0).norm() <= 1e-9 &&
         (psi1.coeff(2) - Quaternion(1.0 / 6.0)).norm() <= 1e-9;
}

bool verify_eigen_table() {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(),
                   k = Quaternion::k();
  const QMatrix A = QMatrix::tridiagonal(
      {Quaternion(1), i, j, k},
      {Quaternion(1) + i, Quaternion(1) + j, Quaternion(1) + k});
  const Quaternion lam[4] = {Quaternion(-1.12826, 0.544285, 0, 0),
                             Quaternion(-0.208978, 0.611905, 0, 0),
                             Quaternion(1.03613, 1.13233, 0, 0),
                             Quaternion(1.3011, 2.0323, 0, 0)};
  const auto pairs = right_eigen(A);
  if (pairs.size() != 4) return false;
  for (const auto& l : lam) {
    bool found = false;
    for (const auto& p : pairs)
      if ((p.value - l).norm() <= 1e-4) found = true;
    if (!found) return false;
  }
  try {
    const auto res = spectrum_check(A, Quaternion(1));
    return res.zero_classes.size() == 4;
  } catch (const Error&) {
    return false;
  }
}

bool verify_random_reconstruction(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 10; ++t) {
    const int N = 2 + static_cast<int>(rng() % 6);
    const BvpSpec spec = random_normal_spec(rng, N);
    const Quaternion s = random_nonzero_quaternion(rng);
    const PhiTable table = build_phi(spec);
    const SamplingExpansion exp = sample_points_method1(spec, s);
    for (int rep = 0; rep < 20; ++rep) {
      TransformCoeffs F;
      for (int m = 0; m < N; ++m) F.push_back(random_quaternion(rng));
      std::vector<Quaternion> samples;
      double scale = 1.0;
      for (const auto& p : exp.points) {
        samples.push_back(transform(F, table, s, p));
        scale = std::max(scale, samples.back().norm());
      }
      const Quaternion lam = random_quaternion(rng, 1.5);
      const Quaternion direct = transform(F, table, s, lam);
      const Quaternion rebuilt = reconstruct(samples, exp, lam);
      if ((direct - rebuilt).norm() > 1e-8 * std::max(scale, direct.norm())) {
        return false;
      }
    }
  }
  return true;
}

bool verify_random_eigen(unsigned long long seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const QMatrix A = random_qmatrix(rng, n, n);
    const double scale = std::max(A.frobenius(), 1.0);
    for (const auto& p : right_eigen(A)) {
      if (vec_norm(A * p.vector - p.vector * p.value) > 1e-9 * scale) {
        return false;
      }
    }
  }
  return true;
}

int cmd_verify(const Options& opt) {
  const Printer pr{opt};
  pr.header({"suite", "status"});
  int bad = 0;
  const auto run = [&](const char* name, bool ok) {
    pr.row(json{{"suite", name}, {"status", ok ? "pass" : "fail"}});
    if (!ok) ++bad;
  };
  run("recurrence-coefficients", verify_recurrence());
  run("cubic-boundary-zeros", verify_cubic_zeros());
  run("mixed-problem-expansion", verify_mixed_expansion());
  run("eigenvalue-table", verify_eigen_table());
  run("random-reconstruction", verify_random_reconstruction(opt.seed));
  run("random-eigen-residuals", verify_random_eigen(opt.seed));
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sampling expansions for quaternion difference equations"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--digits", opt.digits, "significant digits in output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  app.add_flag("--json", opt.json_out, "one JSON object per output line");

  const auto add_common = [&](CLI::App* sub, bool needs_input) {
    // let --digits/--json given after the subcommand reach the parent app
    sub->fallthrough();
    auto* in = sub->add_option("--input", opt.inputs, "input file");
    if (needs_input) in->required();
    sub->add_option("--s", opt.s_literal, "quaternion literal overriding s");
    return sub;
  };

  auto* roots = add_common(app.add_subcommand("roots", "zero classes of a polynomial file"), true);
  auto* eig = add_common(app.add_subcommand("eig", "standard right eigenvalues of a matrix file"), true);
  auto* normal = add_common(app.add_subcommand("normal-check", "normality tests for a matrix file"), true);
  auto* charp = add_common(app.add_subcommand("charpoly", "characteristic polynomial of a tridiagonal symmetric matrix"), true);
  auto* sample = add_common(app.add_subcommand("sample", "sampling expansion of a difference-equation spec"), true);
  sample->add_option("--method", opt.method, "point construction method")
      ->check(CLI::Range(1, 2))
      ->capture_default_str();
  auto* recon = add_common(app.add_subcommand("reconstruct", "transform and reconstruction at test points"), true);
  recon->add_option("--method", opt.method, "point construction method")
      ->check(CLI::Range(1, 2));
  auto* verify = app.add_subcommand("verify", "golden-example and randomized self checks");
  verify->fallthrough();
  verify->add_option("--seed", opt.seed, "seed for the randomized suites")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots->parsed()) return cmd_roots(opt);
    if (eig->parsed()) return cmd_eig(opt);
    if (normal->parsed()) return cmd_normal_check(opt);
    if (charp->parsed()) return cmd_charpoly(opt);
    if (sample->parsed()) return cmd_sample(opt);
    if (recon->parsed()) return cmd_reconstruct(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return e.internal() ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "InternalError: %s\n", e.what());
    return 2;
  }
  return 0;
}
