#include "pullback/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "pullback/error.hpp"

namespace pullback {

SpherePoint::SpherePoint(Complex z) {
  if (std::isfinite(z.real()) && std::isfinite(z.imag())) {
    z_ = z;
  } else {
    infinite_ = true;
  }
}

SpherePoint SpherePoint::infinity() {
  SpherePoint p;
  p.infinite_ = true;
  return p;
}

Complex SpherePoint::value() const {
  if (infinite_) throw DegenerateInput("value() requested for the point at infinity");
  return z_;
}

double SpherePoint::modulus() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : std::abs(z_);
}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite() || b.is_infinite()) {
    const double r = a.is_infinite() ? b.modulus() : a.modulus();
    return 2.0 / std::sqrt(1.0 + r * r);
  }
  const Complex z = a.value();
  const Complex w = b.value();
  const double nz = std::norm(z);
  const double nw = std::norm(w);
  // Very large moduli: compare the reciprocals to avoid overflow.
  if (nz > 1e150 || nw > 1e150) {
    const Complex iz = 1.0 / z;
    const Complex iw = 1.0 / w;
    return 2.0 * std::abs(iz - iw) /
           std::sqrt((1.0 + std::norm(iz)) * (1.0 + std::norm(iw)));
  }
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + nz) * (1.0 + nw));
}

int find_on_sphere(const std::vector<SpherePoint>& set, const SpherePoint& p,
                   double tol) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (chordal_distance(set[i], p) <= tol) return static_cast<int>(i);
  }
  return -1;
}

bool insert_unique(std::vector<SpherePoint>& set, const SpherePoint& p,
                   double tol) {
  if (find_on_sphere(set, p, tol) >= 0) return false;
  set.push_back(p);
  return true;
}

bool is_subset(const std::vector<SpherePoint>& sub,
               const std::vector<SpherePoint>& super, double tol) {
  return std::all_of(sub.begin(), sub.end(), [&](const SpherePoint& p) {
    return find_on_sphere(super, p, tol) >= 0;
  });
}

bool same_set(const std::vector<SpherePoint>& a,
              const std::vector<SpherePoint>& b, double tol) {
  return is_subset(a, b, tol) && is_subset(b, a, tol);
}

void sort_points(std::vector<SpherePoint>& points) {
  auto key = [](const SpherePoint& p) {
    if (p.is_infinite()) {
      return std::tuple<int, double, double>(1, 0.0, 0.0);
    }
    const Complex z = p.value();
    return std::tuple<int, double, double>(0, std::round(z.real() * 1e9), z.imag());
  };
  std::stable_sort(points.begin(), points.end(),
                   [&](const SpherePoint& a, const SpherePoint& b) {
                     return key(a) < key(b);
                   });
}

Complex omega() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

ComplexVector roots_of_unity(int n) {
  if (n < 1) throw DegenerateInput("roots_of_unity needs n >= 1");
  const Complex step = std::polar(1.0, 2.0 * std::numbers::pi / n);
  ComplexVector out;
  out.reserve(static_cast<std::size_t>(n));
  Complex z = 1.0;
  for (int k = 0; k < n; ++k) {
    out.push_back(z / std::abs(z));
    z *= step;
  }
  return out;
}

}  // namespace pullback
