#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pullback/sphere.hpp"

namespace pullback {

/// Parses "re,im" (or a bare real "re"). Throws InputError.
Complex parse_complex(std::string_view text);

/// Parses "re,im" or "inf".
SpherePoint parse_sphere_point(std::string_view text);

/// Parses a list of complex literals separated by whitespace or ';'.
ComplexVector parse_complex_list(std::string_view text);

/// "re,im" with 17 significant digits (round-trips exactly).
std::string format_complex(Complex z);

/// Short fixed-width form for human-readable reports.
std::string format_complex_short(Complex z, int precision = 10);

std::string format_sphere_point(const SpherePoint& p);

}  // namespace pullback
