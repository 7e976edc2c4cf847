#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "quatsamp/io.hpp"

using namespace quatsamp;
using fixtures::I;
using fixtures::J;
using fixtures::K;

TEST_CASE("matrix files: header plus literals") {
  std::istringstream in("2 2\n1 i\n-j 1+k\n");
  const QMatrix A = read_matrix(in);
  REQUIRE(A.rows() == 2);
  REQUIRE(A.cols() == 2);
  CHECK(A(0, 0) == Quaternion(1));
  CHECK(A(0, 1) == I);
  CHECK(A(1, 0) == -J);
  CHECK(A(1, 1) == Quaternion(1) + K);

  std::istringstream bad_header("x 2\n");
  CHECK_THROWS_AS(read_matrix(bad_header), Error);
  std::istringstream short_body("2 2\n1 i\n-j\n");
  CHECK_THROWS_AS(read_matrix(short_body), Error);
}

TEST_CASE("polynomial files: one line, ascending powers") {
  std::istringstream in("\n  3k 3j-3i k-1 j-i\n");
  const QPoly p = read_poly(in);
  CHECK(p.degree() == 3);
  CHECK(p.coeff(0) == 3.0 * K);
  CHECK(p.coeff(1) == 3.0 * (J - I));
  CHECK(p.coeff(3) == J - I);

  std::istringstream empty("\n\n");
  CHECK_THROWS_AS(read_poly(empty), Error);
}

TEST_CASE("bvp spec files: key-value lines with comments") {
  std::istringstream in(
      "# three-level example\n"
      "N = 3\n"
      "a = j j j\n"
      "b = -i -i -i -i\n"
      "h1 = 0\n"
      "h2 = 0\n"
      "s = 1+k\n");
  const BvpFile f = read_bvp(in);
  CHECK(f.spec.N == 3);
  REQUIRE(f.spec.a.size() == 3);
  REQUIRE(f.spec.b.size() == 4);
  CHECK(f.spec.a[0] == J);
  CHECK(f.spec.b[3] == -I);
  CHECK(f.spec.h1 == Quaternion());
  CHECK(f.s == Quaternion(1) + K);
}

TEST_CASE("bvp spec files: defaults and rejections") {
  std::istringstream minimal("N = 1\na = 2j\nb = 1 1\n");
  const BvpFile f = read_bvp(minimal);
  CHECK(f.s == Quaternion(1));  // default
  CHECK(f.spec.h1 == Quaternion());

  std::istringstream unknown("N = 1\na = j\nb = 1 1\nfoo = 2\n");
  CHECK_THROWS_AS(read_bvp(unknown), Error);
  std::istringstream missing("N = 2\na = j j\n");
  CHECK_THROWS_AS(read_bvp(missing), Error);
  std::istringstream badsize("N = 2\na = j\nb = 1 1 1\n");
  CHECK_THROWS_AS(read_bvp(badsize), Error);
  std::istringstream zerob("N = 1\na = j\nb = 1 0\n");
  CHECK_THROWS_AS(read_bvp(zerob), Error);
}

TEST_CASE("quaternion list parsing") {
  const auto v = parse_quaternion_list("1 -k 2i+j");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Quaternion(1));
  CHECK(v[1] == -K);
  CHECK(v[2] == Quaternion(0, 2, 1, 0));
  CHECK(parse_quaternion_list("").empty());
}
