#include "qglf/glnq.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qglf {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u32 mulmod(u32 a, u32 b, u32 q) { return static_cast<u32>(static_cast<u64>(a) * b % q); }

u32 inv_mod(u32 a, u32 q) {
  // q is prime: a^(q-2)
  u64 result = 1, base = a % q;
  for (u32 e = q - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<u32>(result);
}

u32 neg_mod(u32 a, u32 q) { return a == 0 ? 0 : q - a; }

u32 checked_q(long q) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  if (q > 65535) throw std::invalid_argument("q too large for matrix arithmetic");
  return static_cast<u32>(q);
}

std::vector<long> prime_factors(u64 x) {
  std::vector<long> out;
  for (u64 p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      out.push_back(static_cast<long>(p));
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) out.push_back(static_cast<long>(x));
  return out;
}

u64 checked_qn_minus_one(int n, u32 q) {
  u64 v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > (u64{1} << 62) / q) throw std::overflow_error("q^n too large");
    v *= q;
  }
  return v - 1;
}

}  // namespace

bool is_prime(long q) {
  if (q < 2) return false;
  for (long p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

MatrixFq::MatrixFq(int n, u32 q) : n_(n), q_(q), e_(static_cast<std::size_t>(n * n), 0) {
  if (n < 1) throw std::invalid_argument("MatrixFq: n must be positive");
}

MatrixFq::MatrixFq(int n, u32 q, std::vector<u32> entries) : n_(n), q_(q), e_(std::move(entries)) {
  if (n < 1 || e_.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("MatrixFq: bad shape");
  for (auto& v : e_) v %= q_;
}

MatrixFq MatrixFq::identity(int n, u32 q) {
  MatrixFq m(n, q);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

int MatrixFq::rank() const {
  std::vector<u32> a = e_;
  const int n = n_;
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (a[static_cast<std::size_t>(i * n + col)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(piv * n + j)], a[static_cast<std::size_t>(r * n + j)]);
    }
    const u32 inv = inv_mod(a[static_cast<std::size_t>(r * n + col)], q_);
    for (int i = r + 1; i < n; ++i) {
      const u32 f = mulmod(a[static_cast<std::size_t>(i * n + col)], inv, q_);
      if (f == 0) continue;
      for (int j = col; j < n; ++j) {
        const u32 sub = mulmod(f, a[static_cast<std::size_t>(r * n + j)], q_);
        u32& x = a[static_cast<std::size_t>(i * n + j)];
        x = (x + q_ - sub) % q_;
      }
    }
    ++r;
  }
  return r;
}

MatrixFq MatrixFq::inverse() const {
  const int n = n_;
  const int w = 2 * n;
  std::vector<u32> a(static_cast<std::size_t>(n * w), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * w + j)] = at(i, j);
    a[static_cast<std::size_t>(i * w + n + i)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i) {
      if (a[static_cast<std::size_t>(i * w + col)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("MatrixFq::inverse: singular matrix");
    if (piv != col) {
      for (int j = 0; j < w; ++j) std::swap(a[static_cast<std::size_t>(piv * w + j)], a[static_cast<std::size_t>(col * w + j)]);
    }
    const u32 inv = inv_mod(a[static_cast<std::size_t>(col * w + col)], q_);
    for (int j = 0; j < w; ++j) a[static_cast<std::size_t>(col * w + j)] = mulmod(a[static_cast<std::size_t>(col * w + j)], inv, q_);
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const u32 f = a[static_cast<std::size_t>(i * w + col)];
      if (f == 0) continue;
      for (int j = 0; j < w; ++j) {
        const u32 sub = mulmod(f, a[static_cast<std::size_t>(col * w + j)], q_);
        u32& x = a[static_cast<std::size_t>(i * w + j)];
        x = (x + q_ - sub) % q_;
      }
    }
  }
  MatrixFq out(n, q_);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.set(i, j, a[static_cast<std::size_t>(i * w + n + j)]);
  }
  return out;
}

MatrixFq MatrixFq::pow(unsigned long long e) const {
  MatrixFq result = identity(n_, q_);
  MatrixFq base = *this;
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
  if (n_ != o.n_ || q_ != o.q_) throw std::invalid_argument("MatrixFq: shape mismatch");
  MatrixFq out(n_, q_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      u64 s = 0;
      for (int l = 0; l < n_; ++l) s += static_cast<u64>(at(i, l)) * o.at(l, j);
      out.e_[static_cast<std::size_t>(i * n_ + j)] = static_cast<u32>(s % q_);
    }
  }
  return out;
}

MatrixFq MatrixFq::operator-(const MatrixFq& o) const {
  if (n_ != o.n_ || q_ != o.q_) throw std::invalid_argument("MatrixFq: shape mismatch");
  MatrixFq out(n_, q_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = (e_[i] + q_ - o.e_[i]) % q_;
  return out;
}

std::string MatrixFq::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

void PolyFq::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string PolyFq::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const u32 c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (c != 1 && i > 0) os << '*';
    if (i > 0) os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

PolyFq poly_mul(const PolyFq& a, const PolyFq& b) {
  PolyFq out{a.q, {}};
  if (a.coeffs.empty() || b.coeffs.empty()) return out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out.coeffs[i + j] = (out.coeffs[i + j] + mulmod(a.coeffs[i], b.coeffs[j], a.q)) % a.q;
    }
  }
  out.trim();
  return out;
}

PolyFq poly_mod(const PolyFq& a, const PolyFq& b) {
  if (b.coeffs.empty()) throw std::domain_error("poly_mod: division by zero");
  const u32 q = a.q;
  PolyFq r = a;
  r.trim();
  const int db = b.degree();
  const u32 lead_inv = inv_mod(b.coeffs.back(), q);
  while (r.degree() >= db) {
    const int shift = r.degree() - db;
    const u32 f = mulmod(r.coeffs.back(), lead_inv, q);
    for (int i = 0; i <= db; ++i) {
      u32& x = r.coeffs[static_cast<std::size_t>(i + shift)];
      x = (x + q - mulmod(f, b.coeffs[static_cast<std::size_t>(i)], q)) % q;
    }
    r.trim();
  }
  return r;
}

PolyFq monic_from_index(u32 q, int deg, unsigned long long index) {
  PolyFq f{q, std::vector<u32>(static_cast<std::size_t>(deg + 1), 0)};
  for (int i = 0; i < deg; ++i) {
    f.coeffs[static_cast<std::size_t>(i)] = static_cast<u32>(index % q);
    index /= q;
  }
  f.coeffs[static_cast<std::size_t>(deg)] = 1;
  return f;
}

bool is_irreducible(const PolyFq& f) {
  PolyFq g = f;
  g.trim();
  const int n = g.degree();
  if (n < 1) return false;
  for (int d = 1; d <= n / 2; ++d) {
    unsigned long long count = 1;
    for (int i = 0; i < d; ++i) count *= f.q;
    for (unsigned long long idx = 0; idx < count; ++idx) {
      if (poly_mod(g, monic_from_index(f.q, d, idx)).coeffs.empty()) return false;
    }
  }
  return true;
}

BigInt count_monic_irreducible(int n, long q) {
  if (n < 1) throw std::invalid_argument("count_monic_irreducible: n must be positive");
  // (1/n) sum_{d | n} mu(d) q^{n/d}
  auto mobius = [](int d) {
    int sign = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        sign = -sign;
      }
    }
    if (d > 1) sign = -sign;
    return sign;
  };
  BigInt sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n / d));
    sum += mobius(d) * p;
  }
  return sum / n;
}

BigInt group_order(int n, long q) {
  if (n < 1 || q < 2) throw std::invalid_argument("group_order: need n >= 1, q >= 2");
  BigInt qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
  BigInt out = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

std::vector<MatrixFq> enumerate_gl(int n, long q, double budget_bits) {
  const u32 qq = checked_q(q);
  if (n < 1) throw std::invalid_argument("enumerate_gl: n must be positive");
  const double bits = static_cast<double>(n) * n * std::log2(static_cast<double>(q));
  if (bits > budget_bits) throw std::length_error("enumerate_gl: q^(n^2) exceeds the enumeration budget");
  const std::size_t cells = static_cast<std::size_t>(n * n);
  std::vector<MatrixFq> out;
  out.reserve(group_order(n, q).get_ui());
  // odometer over entries, first entry most significant
  std::vector<u32> e(cells, 0);
  while (true) {
    MatrixFq m(n, qq, e);
    if (m.invertible()) out.push_back(std::move(m));
    std::size_t i = cells;
    while (i > 0 && e[i - 1] == qq - 1) e[--i] = 0;
    if (i == 0) break;
    ++e[i - 1];
  }
  return out;
}

int fixed_dim(const MatrixFq& m) { return m.n() - (m - MatrixFq::identity(m.n(), m.q())).rank(); }

PolyFq char_poly(const MatrixFq& m) {
  const int n = m.n();
  const u32 q = m.q();
  // h is reduced to upper Hessenberg form by similarity transforms.
  std::vector<std::vector<u32>> h(static_cast<std::size_t>(n), std::vector<u32>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
  }
  auto H = [&](int i, int j) -> u32& { return h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i) {
      if (H(i, j) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(h[static_cast<std::size_t>(piv)], h[static_cast<std::size_t>(j + 1)]);
      for (int i = 0; i < n; ++i) std::swap(H(i, piv), H(i, j + 1));
    }
    const u32 inv = inv_mod(H(j + 1, j), q);
    for (int i = j + 2; i < n; ++i) {
      const u32 f = mulmod(H(i, j), inv, q);
      if (f == 0) continue;
      // row_i -= f row_{j+1}; then col_{j+1} += f col_i
      for (int c = 0; c < n; ++c) H(i, c) = (H(i, c) + q - mulmod(f, H(j + 1, c), q)) % q;
      for (int r = 0; r < n; ++r) H(r, j + 1) = (H(r, j + 1) + mulmod(f, H(r, i), q)) % q;
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i=1}^{k-1} h_{k-i,k} (prod_{l=k-i+1}^{k} h_{l,l-1}) p_{k-i-1}, 1-based
  std::vector<PolyFq> p;
  p.push_back(PolyFq{q, {1}});
  for (int k = 1; k <= n; ++k) {
    PolyFq next = poly_mul(PolyFq{q, {neg_mod(H(k - 1, k - 1), q), 1}}, p[static_cast<std::size_t>(k - 1)]);
    next.coeffs.resize(static_cast<std::size_t>(k + 1), 0);
    u32 prod = 1;
    for (int i = 1; i <= k - 1; ++i) {
      prod = mulmod(prod, H(k - i, k - i - 1), q);
      const u32 f = mulmod(H(k - i - 1, k - 1), prod, q);
      if (f == 0) continue;
      const PolyFq& lower = p[static_cast<std::size_t>(k - i - 1)];
      for (std::size_t c = 0; c < lower.coeffs.size(); ++c) {
        next.coeffs[c] = (next.coeffs[c] + q - mulmod(f, lower.coeffs[c], q)) % q;
      }
    }
    next.trim();
    p.push_back(std::move(next));
  }
  return p.back();
}

MatrixFq companion(const PolyFq& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion: need a monic polynomial of degree >= 1");
  const int n = f.degree();
  MatrixFq m(n, f.q);
  for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, 1);
  for (int j = 0; j < n; ++j) m.set(n - 1, j, neg_mod(f.coeffs[static_cast<std::size_t>(j)], f.q));
  return m;
}

bool is_regular_elliptic(const MatrixFq& m) {
  return m.invertible() && fixed_dim(m) == 0 && is_irreducible(char_poly(m));
}

bool is_singer(const MatrixFq& m) {
  const u64 order = checked_qn_minus_one(m.n(), m.q());
  const MatrixFq id = MatrixFq::identity(m.n(), m.q());
  if (!(m.pow(order) == id)) return false;
  for (long p : prime_factors(order)) {
    if (m.pow(order / static_cast<u64>(p)) == id) return false;
  }
  return true;
}

std::vector<MatrixFq> regular_elliptic_companions(int n, long q) {
  const u32 qq = checked_q(q);
  const u64 count = checked_qn_minus_one(n, qq) + 1;
  std::vector<MatrixFq> out;
  for (u64 idx = 0; idx < count; ++idx) {
    const PolyFq f = monic_from_index(qq, n, idx);
    // f(0) = 0 would give a singular companion (only f = x when n = 1)
    if (f.coeffs.front() == 0 || !is_irreducible(f)) continue;
    MatrixFq c = companion(f);
    if (fixed_dim(c) == 0) out.push_back(std::move(c));
  }
  return out;
}

MatrixFq find_regular_elliptic(int n, long q, bool want_singer) {
  for (auto& c : regular_elliptic_companions(n, q)) {
    if (!want_singer || is_singer(c)) return c;
  }
  throw std::runtime_error("find_regular_elliptic: no regular elliptic element exists for these parameters");
}

}  // namespace qglf
