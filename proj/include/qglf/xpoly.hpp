#pragma once

#include <algorithm>
#include <vector>

#include "qglf/domain.hpp"

namespace qglf {

/// Polynomial in a marker variable x with coefficients in an exact domain
/// (QRational or Rational). coefficients()[k] multiplies x^k; trailing zeros
/// are never stored.
template <class V>
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<V> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static XPoly constant(const V& c) { return XPoly(std::vector<V>{c}); }
  static XPoly x() { return XPoly(std::vector<V>{V(0), V(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  V coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return V(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const std::vector<V>& coefficients() const { return coeffs_; }

  V evaluate(const V& x) const {
    V acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  XPoly& operator+=(const XPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), V(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  XPoly& operator-=(const XPoly& o) { return *this += o * V(-1); }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<V> out(a.coeffs_.size() + b.coeffs_.size() - 1, V(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (qglf::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return XPoly(std::move(out));
  }
  friend XPoly operator*(XPoly a, const V& c) {
    for (auto& x : a.coeffs_) x *= c;
    a.trim();
    return a;
  }
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && qglf::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<V> coeffs_;
};

}  // namespace qglf
