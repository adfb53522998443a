#include "pullback/poly.hpp"

#include <algorithm>
#include <cmath>

namespace pullback {

ComplexPoly::ComplexPoly(ComplexVector coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

ComplexPoly::ComplexPoly(std::initializer_list<Complex> coefficients)
    : coeffs_(coefficients) {
  trim();
}

ComplexPoly ComplexPoly::constant(Complex c) { return ComplexPoly({c}); }

ComplexPoly ComplexPoly::monomial(int degree, Complex c) {
  ComplexVector v(static_cast<std::size_t>(degree) + 1, Complex{});
  v.back() = c;
  return ComplexPoly(std::move(v));
}

void ComplexPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

double ComplexPoly::l1_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

ComplexPoly ComplexPoly::trimmed_relative(double rel) const {
  double biggest = 0.0;
  for (const auto& c : coeffs_) biggest = std::max(biggest, std::abs(c));
  ComplexVector v = coeffs_;
  while (!v.empty() && std::abs(v.back()) <= rel * biggest) v.pop_back();
  return ComplexPoly(std::move(v));
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexVector v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return ComplexPoly(std::move(v));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexVector v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return ComplexPoly(std::move(v));
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ComplexVector v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ComplexPoly(std::move(v));
}

ComplexPoly operator*(Complex s, const ComplexPoly& p) {
  ComplexVector v = p.coeffs_;
  for (auto& c : v) c *= s;
  return ComplexPoly(std::move(v));
}

ComplexPoly expand_from_roots(std::span<const RootMultiplicity> roots) {
  ComplexVector v{1.0};
  for (const auto& [root, mult] : roots) {
    for (int k = 0; k < mult; ++k) {
      // multiply by (w - root) in place
      v.push_back(Complex{});
      for (std::size_t i = v.size() - 1; i > 0; --i) {
        v[i] = v[i - 1] - root * v[i];
      }
      v[0] = -root * v[0];
    }
  }
  return ComplexPoly(std::move(v));
}

ComplexPoly derivative(const ComplexPoly& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return {};
  ComplexVector v(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    v[i - 1] = static_cast<double>(i) * c[i];
  }
  return ComplexPoly(std::move(v));
}

ComplexPoly antiderivative(const ComplexPoly& p, Complex base) {
  const auto c = p.coefficients();
  ComplexVector v(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    v[i + 1] = c[i] / static_cast<double>(i + 1);
  }
  ComplexPoly result(std::move(v));
  const Complex shift = eval(result, base);
  return result - ComplexPoly::constant(shift);
}

Complex eval(const ComplexPoly& p, Complex z) {
  const auto c = p.coefficients();
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double eval_scale(const ComplexPoly& p, Complex z) {
  const auto c = p.coefficients();
  const double r = std::abs(z);
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

ComplexPoly compose(const ComplexPoly& outer, const ComplexPoly& inner) {
  const auto c = outer.coefficients();
  ComplexPoly acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * inner + ComplexPoly::constant(*it);
  }
  return acc;
}

}  // namespace pullback
