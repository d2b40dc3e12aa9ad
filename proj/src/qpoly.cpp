#include "qglf/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qglf {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly QPoly::monomial(const BigInt& c, int e) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.push_back(c);
    p.low_ = e;
  }
  return p;
}

QPoly QPoly::from_coefficients(std::vector<BigInt> coeffs, int low) {
  QPoly p;
  p.coeffs_ = std::move(coeffs);
  p.low_ = low;
  p.normalize();
  return p;
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto skip = first - coeffs_.begin();
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    low_ += static_cast<int>(skip);
  }
}

BigInt QPoly::coefficient(int e) const {
  if (coeffs_.empty() || e < low_ || e > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

QPoly QPoly::shifted(int e) const {
  QPoly p = *this;
  if (!p.coeffs_.empty()) p.low_ += e;
  return p;
}

BigInt QPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::primitive_part() const {
  if (coeffs_.empty()) return {};
  BigInt g = content();
  if (coeffs_.back() < 0) g = -g;
  return divided_by(g);
}

QPoly QPoly::divided_by(const BigInt& c) const {
  if (c == 0) throw std::domain_error("QPoly: division by zero");
  QPoly p = *this;
  if (c == 1) return p;
  for (auto& x : p.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return p;
}

std::optional<QPoly> QPoly::exact_quotient(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
  if (is_zero()) return QPoly{};
  const std::size_t n = coeffs_.size();
  const std::size_t m = d.coeffs_.size();
  if (n < m) return std::nullopt;
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(n - m + 1);
  const BigInt& lead = d.coeffs_.back();
  BigInt r;
  for (std::size_t i = n - m + 1; i-- > 0;) {
    BigInt& top = rem[i + m - 1];
    if (top == 0) continue;
    mpz_tdiv_r(r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) return std::nullopt;
    mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < m; ++j) {
      mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), d.coeffs_[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return from_coefficients(std::move(quot), low_ - d.low_);
}

Rational QPoly::evaluate(const Rational& q) const {
  if (coeffs_.empty()) return 0;
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * q + Rational(coeffs_[i]);
  }
  if (low_ != 0) {
    if (q == 0) throw std::domain_error("QPoly: evaluating a negative power at q = 0");
    Rational base = low_ > 0 ? q : Rational(1) / q;
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(low_)));
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(low_)));
    p.canonicalize();
    acc *= p;
  }
  return acc;
}

BigInt QPoly::evaluate(const BigInt& q) const {
  if (!is_polynomial()) throw std::domain_error("QPoly: integer evaluation of a Laurent polynomial");
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + coeffs_[i];
  if (low_ > 0) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(low_));
    acc *= p;
  }
  return acc;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
    coeffs_[static_cast<std::size_t>(o.low_ - lo) + j] += o.coeffs_[j];
  }
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return QPoly::from_coefficients(std::move(out), a.low_ + b.low_);
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= low_; --e) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

QPoly qfactorial(int m) {
  QPoly acc = 1;
  QPoly bracket = 0;
  for (int i = 1; i <= m; ++i) {
    bracket += QPoly::q_power(i - 1);
    acc *= bracket;
  }
  return acc;
}

QPoly qbinomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  k = std::min(k, n - k);
  // prod_{i=1}^{j} (1 - q^{n-k+i}) / (1 - q^i) equals [n-k+j, j]_q at every step.
  QPoly acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= QPoly(1) - QPoly::q_power(n - k + i);
    acc = *acc.exact_quotient(QPoly(1) - QPoly::q_power(i));
  }
  return acc;
}

QPoly qmultinomial(int n, const std::vector<int>& parts) {
  long total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("qmultinomial: negative part");
    total += p;
  }
  if (total != n) throw std::invalid_argument("qmultinomial: parts must sum to n");
  QPoly acc = 1;
  int remaining = n;
  for (int p : parts) {
    acc *= qbinomial(remaining, p);
    remaining -= p;
  }
  return acc;
}

}  // namespace qglf
