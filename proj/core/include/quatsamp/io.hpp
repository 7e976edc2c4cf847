#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quatsamp/bvp.hpp"
#include "quatsamp/qmatrix.hpp"
#include "quatsamp/qpoly.hpp"

namespace quatsamp {

/// Matrix file: first line `n m`, then n lines of m quaternion literals
/// separated by whitespace.
QMatrix read_matrix(std::istream& in);
QMatrix read_matrix_file(const std::string& path);

/// Polynomial file: one line of quaternion literals, ascending powers.
QPoly read_poly(std::istream& in);
QPoly read_poly_file(const std::string& path);

/// BVP spec file, line-oriented `key = value`:
///   N, a (q1..qN), b (q0..qN), h1, h2, s.  Unknown keys are rejected.
struct BvpFile {
  BvpSpec spec;
  Quaternion s{1.0};
};
BvpFile read_bvp(std::istream& in);
BvpFile read_bvp_file(const std::string& path);

/// Whitespace-separated quaternion literals.
std::vector<Quaternion> parse_quaternion_list(const std::string& line);

}  // namespace quatsamp
