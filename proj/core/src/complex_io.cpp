#include "pullback/complex_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "pullback/error.hpp"

namespace pullback {
namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_real(std::string_view text, std::string_view whole) {
  text = strip(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw InputError("malformed complex literal '" + std::string(whole) +
                     "' (expected \"re,im\")");
  }
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    return {parse_real(text, text), 0.0};
  }
  if (text.find(',', comma + 1) != std::string_view::npos) {
    throw InputError("malformed complex literal '" + std::string(text) +
                     "' (too many components)");
  }
  return {parse_real(text.substr(0, comma), text),
          parse_real(text.substr(comma + 1), text)};
}

SpherePoint parse_sphere_point(std::string_view text) {
  const auto t = strip(text);
  if (t == "inf" || t == "infinity") return SpherePoint::infinity();
  return parse_complex(t);
}

ComplexVector parse_complex_list(std::string_view text) {
  ComplexVector out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find_first_of(" \t\n;", pos);
    const auto token = text.substr(pos, end == std::string_view::npos
                                            ? std::string_view::npos
                                            : end - pos);
    if (!strip(token).empty()) out.push_back(parse_complex(token));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (out.empty()) throw InputError("empty coefficient list");
  return out;
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::string format_complex_short(Complex z, int precision) {
  char buf[96];
  const double re = std::abs(z.real()) < 0.5 * std::pow(10.0, -precision) ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 0.5 * std::pow(10.0, -precision) ? 0.0 : z.imag();
  std::snprintf(buf, sizeof buf, "%.*f,%.*f", precision, re + 0.0, precision, im + 0.0);
  return buf;
}

std::string format_sphere_point(const SpherePoint& p) {
  return p.is_infinite() ? std::string("inf") : format_complex_short(p.value());
}

}  // namespace pullback
