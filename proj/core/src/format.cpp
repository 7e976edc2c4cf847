#include "quatsamp/format.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "quatsamp/errors.hpp"

namespace quatsamp {

namespace {

[[noreturn]] void parse_fail(std::string_view text, size_t pos,
                             const std::string& what) {
  fail(errc::parse_error, "'" + std::string(text) + "' at column " +
                              std::to_string(pos + 1) + ": " + what);
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  if (text.empty()) parse_fail(text, 0, "empty literal");
  Quaternion q;
  size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1.0;
      ++pos;
    } else if (!first) {
      parse_fail(text, pos, "expected '+' or '-' between terms");
    }
    if (pos >= text.size()) parse_fail(text, pos, "dangling sign");

    double mag = 1.0;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos])) ||
        text[pos] == '.') {
      // strtod accepts more than the grammar (hex, inf); the leading-char
      // check above keeps it to plain floats.
      std::string term(text.substr(pos));
      char* end = nullptr;
      mag = std::strtod(term.c_str(), &end);
      if (end == term.c_str()) parse_fail(text, pos, "malformed number");
      pos += static_cast<size_t>(end - term.c_str());
      have_number = true;
    }

    double* component = &q.w;
    if (pos < text.size() &&
        (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      component = text[pos] == 'i' ? &q.x : text[pos] == 'j' ? &q.y : &q.z;
      ++pos;
    } else if (!have_number) {
      parse_fail(text, pos, "expected number or unit i/j/k");
    }
    *component += sign * mag;
    first = false;
  }
  return q;
}

std::string format_real(double v, int digits) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string format_quaternion(const Quaternion& q, int digits) {
  std::string out;
  const double comps[4] = {q.w, q.x, q.y, q.z};
  const char* units[4] = {"", "i", "j", "k"};
  for (int m = 0; m < 4; ++m) {
    double v = comps[m];
    if (v == 0.0) continue;
    std::string num = format_real(v, digits);
    if (m > 0 && num == "1") num.clear();       // unit coefficient: "i", not "1i"
    if (m > 0 && num == "-1") num = "-";
    if (!out.empty() && num.rfind('-', 0) != 0) out += '+';
    out += num + units[m];
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace quatsamp
