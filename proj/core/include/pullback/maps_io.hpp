#pragma once

#include <string>
#include <string_view>

#include "pullback/const_sigma.hpp"
#include "pullback/poly.hpp"

namespace pullback {

// Map files are JSON. A rational map is {"num": [...], "den": [...]} with
// ascending coefficients written as numbers or "re,im" strings. A
// decomposition file is {"s": <map>, "g": <map>, "A": ["re,im" | "inf", ...]}.
// Unknown or missing fields raise InputError.

RationalMap parse_rational_map(std::string_view json_text);
RationalMap load_rational_map(const std::string& path);

DecompositionInstance parse_decomposition(std::string_view json_text);
DecompositionInstance load_decomposition(const std::string& path);

}  // namespace pullback
