#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qglf/domain.hpp"

namespace qglf {

/// Laurent polynomial in three named variables (x, y, z) with exact
/// coefficients. Exponent triples may be negative; zero terms are dropped.
template <class V>
class MultiLaurent {
 public:
  using Exponent = std::array<int, 3>;

  MultiLaurent() = default;

  static MultiLaurent monomial(const V& c, Exponent e) {
    MultiLaurent m;
    m.add(e, c);
    return m;
  }
  static MultiLaurent constant(const V& c) { return monomial(c, {0, 0, 0}); }

  void add(const Exponent& e, const V& c) {
    if (qglf::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (qglf::is_zero(it->second)) terms_.erase(it);
    }
  }

  const std::map<Exponent, V>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::array<std::string, 3>& variables() const { return names_; }

  MultiLaurent& operator+=(const MultiLaurent& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    MultiLaurent out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
      }
    }
    return out;
  }
  friend MultiLaurent operator*(MultiLaurent a, const V& c) {
    MultiLaurent out;
    for (const auto& [e, v] : a.terms_) out.add(e, v * c);
    return out;
  }
  friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) { return a.terms_ == b.terms_; }

  /// Monomials maximizing w . exponent; returns all ties.
  std::vector<Exponent> max_weight_monomials(const std::array<int, 3>& w) const {
    std::vector<Exponent> best;
    long best_weight = 0;
    for (const auto& [e, c] : terms_) {
      long weight = static_cast<long>(w[0]) * e[0] + static_cast<long>(w[1]) * e[1] + static_cast<long>(w[2]) * e[2];
      if (best.empty() || weight > best_weight) {
        best = {e};
        best_weight = weight;
      } else if (weight == best_weight) {
        best.push_back(e);
      }
    }
    return best;
  }

  /// Substitutes values for x, y, z (all nonzero when negative powers occur).
  template <class D>
  V evaluate(const D& d, const V& x, const V& y, const V& z) const {
    V sum = d.from_int(0);
    const std::array<V, 3> vals{x, y, z};
    for (const auto& [e, c] : terms_) {
      V term = c;
      for (std::size_t i = 0; i < 3; ++i) {
        V p = d.from_int(1);
        for (int k = 0; k < std::abs(e[i]); ++k) p *= vals[i];
        term = e[i] >= 0 ? V(term * p) : V(term / p);
      }
      sum += term;
    }
    return sum;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      for (std::size_t i = 0; i < 3; ++i) {
        if (it->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names_[i];
        if (it->first[i] != 1) mono += "^" + std::to_string(it->first[i]);
      }
      std::string c = render_value(it->second);
      const bool integer = c.find_first_not_of("-0123456789") == std::string::npos;
      if (!integer) c = "(" + c + ")";
      std::string term;
      if (mono.empty()) {
        term = c;
      } else if (c == "1") {
        term = mono;
      } else if (c == "-1") {
        term = "-" + mono;
      } else {
        term = c + "*" + mono;
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  static std::string render_value(const QRational& v) { return v.to_string(); }
  static std::string render_value(const Rational& v) { return v.get_str(); }

  std::map<Exponent, V> terms_;
  std::array<std::string, 3> names_{"x", "y", "z"};
};

}  // namespace qglf
