#include "quatsamp/io.hpp"

#include <fstream>
#include <sstream>

#include "quatsamp/errors.hpp"
#include "quatsamp/format.hpp"

namespace quatsamp {

namespace {

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open '" + path + "'");
  return in;
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<Quaternion> parse_quaternion_list(const std::string& line) {
  std::vector<Quaternion> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(parse_quaternion(tok));
  return out;
}

QMatrix read_matrix(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m) || n <= 0 || m <= 0) {
    fail(errc::parse_error, "matrix header must be 'n m' with positive sizes");
  }
  QMatrix A(n, m);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) {
      std::string tok;
      if (!(in >> tok)) {
        fail(errc::parse_error, "matrix body ended early at row " +
                                    std::to_string(r + 1));
      }
      A(r, c) = parse_quaternion(tok);
    }
  }
  return A;
}

QMatrix read_matrix_file(const std::string& path) {
  auto in = open_or_fail(path);
  return read_matrix(in);
}

QPoly read_poly(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (!line.empty()) break;
  }
  if (line.empty()) fail(errc::parse_error, "empty polynomial file");
  auto coeffs = parse_quaternion_list(line);
  if (coeffs.empty()) fail(errc::parse_error, "no polynomial coefficients");
  return QPoly(std::move(coeffs));
}

QPoly read_poly_file(const std::string& path) {
  auto in = open_or_fail(path);
  return read_poly(in);
}

BvpFile read_bvp(std::istream& in) {
  BvpFile out;
  bool have_n = false, have_a = false, have_b = false;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(errc::parse_error, "expected 'key = value', got '" + line + "'");
    }
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key == "N") {
      out.spec.N = std::stoi(value);
      have_n = true;
    } else if (key == "a") {
      out.spec.a = parse_quaternion_list(value);
      have_a = true;
    } else if (key == "b") {
      out.spec.b = parse_quaternion_list(value);
      have_b = true;
    } else if (key == "h1") {
      out.spec.h1 = parse_quaternion(value);
    } else if (key == "h2") {
      out.spec.h2 = parse_quaternion(value);
    } else if (key == "s") {
      out.s = parse_quaternion(value);
    } else {
      fail(errc::parse_error, "unknown key '" + key + "' in BVP spec file");
    }
  }
  if (!have_n || !have_a || !have_b) {
    fail(errc::parse_error, "BVP spec file needs at least N, a and b");
  }
  out.spec.validate();
  return out;
}

BvpFile read_bvp_file(const std::string& path) {
  auto in = open_or_fail(path);
  return read_bvp(in);
}

}  // namespace quatsamp
