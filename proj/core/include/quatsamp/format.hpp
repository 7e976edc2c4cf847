#pragma once

#include <string>
#include <string_view>

#include "quatsamp/quaternion.hpp"

namespace quatsamp {

/// Parses the quaternion literal grammar: optional-signed terms `<float>`,
/// `<float>i`, `<float>j`, `<float>k` in any order, coefficient 1 omissible
/// ("1+2i-3j+0.5k", "-k", "0").  No whitespace inside a literal.
/// Throws parse_error naming the offending column (1-based).
Quaternion parse_quaternion(std::string_view text);

/// Formats with `digits` significant digits; negative zero is normalized.
/// At 17 digits the result round-trips through parse_quaternion exactly.
std::string format_quaternion(const Quaternion& q, int digits);

std::string format_real(double v, int digits);

}  // namespace quatsamp
