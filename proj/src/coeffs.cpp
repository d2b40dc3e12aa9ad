#include "qglf/coeffs.hpp"

#include <numeric>
#include <stdexcept>

#include "qglf/qcalc.hpp"

namespace qglf {
namespace {

template <ExactDomain D>
typename D::value_type power(const D& d, const typename D::value_type& v, int e) {
  typename D::value_type acc = d.from_int(1);
  for (int i = 0; i < e; ++i) acc *= v;
  return acc;
}

template <class V>
V negate_if(bool flag, const V& v) {
  return flag ? V(-v) : v;
}

void require_nonnegative(const std::vector<int>& rs, const char* who) {
  for (int r : rs) {
    if (r < 0) throw std::invalid_argument(std::string(who) + ": negative index");
  }
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

BigInt m_classical(int m, const std::vector<int>& rs) {
  require_nonnegative(rs, "m_classical");
  if (rs.empty()) return 0;
  const int lo = *std::min_element(rs.begin(), rs.end());
  BigInt sum = 0;
  for (int d = 0; d <= lo; ++d) {
    BigInt term = binomial(m, d);
    for (int r : rs) term *= binomial(m - d, r - d);
    sum += (d % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

template <ExactDomain D>
typename D::value_type m_q(const D& d, int m, const std::vector<int>& rs) {
  using V = typename D::value_type;
  require_nonnegative(rs, "m_q");
  if (rs.empty()) return d.from_int(0);
  const long k = static_cast<long>(rs.size());
  const int lo = *std::min_element(rs.begin(), rs.end());
  V sum = d.from_int(0);
  for (int j = 0; j <= lo; ++j) {
    V term = d.q_power(binom2(j + 1) - k * j) * q_binomial(d, m, j);
    for (int r : rs) term *= q_binomial(d, m - j, r - j);
    sum += negate_if(j % 2 == 1, term);
  }
  if constexpr (std::is_same_v<D, SymbolicQ>) {
    if (!sum.is_laurent()) throw std::logic_error("m_q: result is not a Laurent polynomial");
  }
  return sum;
}

template <ExactDomain D>
typename D::value_type b_two(const D& d, int n, int t, int u) {
  using V = typename D::value_type;
  if (n < 1 || t < 0 || u < 0 || t > n || u > n) throw std::invalid_argument("b_two: need n >= 1 and 0 <= t, u <= n");
  if (t + u > n) return d.from_int(0);
  if ((t == n && u == 0) || (t == 0 && u == n)) return d.from_int(1);
  V ratio = q_factorial(d, n - t - 1) * q_factorial(d, n - u - 1) / (q_factorial(d, n - 1) * q_factorial(d, n - t - u));
  V tail = (d.q_power(n) - d.q_power(t) - d.q_power(u) + d.from_int(1)) / (d.q_power(1) - d.from_int(1));
  return d.q_power(static_cast<long>(t) * u - t - u) * ratio * tail;
}

template <ExactDomain D>
typename D::value_type b_multi(const D& d, int n, const std::vector<int>& p) {
  using V = typename D::value_type;
  std::vector<int> reduced;
  for (int x : p) {
    if (x < 0 || x > n) throw std::invalid_argument("b_multi: indices must lie in [0, n]");
    if (x != n) reduced.push_back(x);
  }
  if (reduced.empty()) return d.from_int(0);
  V denom = d.from_int(1);
  for (int x : reduced) denom *= q_binomial(d, n - 1, x);
  return m_q(d, n - 1, reduced) / denom;
}

template <ExactDomain D>
typename D::value_type genus0_count(const D& d, int n, const std::vector<int>& r) {
  if (r.empty()) throw std::invalid_argument("genus0_count: empty dimension vector");
  long sum = 0;
  long exponent = 0;
  for (int x : r) {
    if (x < 0 || x >= n) throw std::invalid_argument("genus0_count: need 0 <= r_i < n");
    sum += x;
    exponent += static_cast<long>(n - x - 1) * x;
  }
  const long k = static_cast<long>(r.size());
  if (sum != (k - 1) * n) throw std::invalid_argument("genus0_count: dimension vector is not genus 0");
  return d.q_power(exponent) * power(d, d.q_power(n) - d.from_int(1), static_cast<int>(k - 1));
}

template <ExactDomain D>
typename D::value_type reflection_count(const D& d, int n, int l) {
  using V = typename D::value_type;
  if (n < 1 || l < 0) throw std::invalid_argument("reflection_count: need n >= 1, l >= 0");
  V inner = negate_if(n % 2 == 0, qq_pochhammer(d, n - 1));  // (-1)^{n-1} (q;q)_{n-1}
  for (int k = 0; k <= n - 1; ++k) {
    V base = d.from_int(1) + d.q_power(n - k - 1) - d.q_power(n - k);
    V term = d.q_power(binom2(k + 1)) * q_binomial(d, n - 1, k) * power(d, base, l);
    inner += negate_if((k + n) % 2 == 1, term);
  }
  V prefactor = power(d, V(-q_integer(d, n)), l) / (d.q_power(binom2(n)) * qq_pochhammer(d, n));
  return prefactor * inner;
}

template <ExactDomain D>
MultiLaurent<typename D::value_type> p_g_polynomial(const D& d, int g) {
  using V = typename D::value_type;
  using ML = MultiLaurent<V>;
  if (g < 1) throw std::invalid_argument("p_g_polynomial: g must be positive");
  const V one = d.from_int(1);
  // prod_{i=1}^{count} (w q^i - 1), w the variable at position `axis`
  auto shifted_product = [&](int axis, int count) {
    ML acc = ML::constant(one);
    for (int i = 1; i <= count; ++i) {
      std::array<int, 3> e{0, 0, 0};
      e[static_cast<std::size_t>(axis)] = 1;
      ML factor = ML::monomial(d.q_power(i), e);
      factor.add({0, 0, 0}, -one);
      acc = acc * factor;
    }
    return acc;
  };

  ML head = ML::monomial(one, {0, -g, g}) * shifted_product(1, g);
  head += ML::monomial(one, {0, g, -g}) * shifted_product(2, g);
  ML result = head * negate_if(g % 2 == 1, d.q_power(-g));

  const V g_fact = q_factorial(d, g);
  for (int tp = 0; tp <= g - 1; ++tp) {
    for (int up = 0; up <= g - 1 && tp + up <= g; ++up) {
      V coeff = g_fact / (q_factorial(d, tp) * q_factorial(d, up) * q_factorial(d, g - tp - up));
      coeff = negate_if((tp + up) % 2 == 1, coeff) * d.q_power(static_cast<long>(tp) * up - tp - up);
      ML linear = ML::monomial(one, {1, 0, 0});
      linear.add({0, 1, 0}, -d.q_power(tp));
      linear.add({0, 0, 1}, -d.q_power(up));
      linear.add({0, 0, 0}, one);
      ML term = ML::monomial(coeff, {0, up - tp, tp - up}) * linear;
      term = term * shifted_product(2, g - tp - 1);
      term = term * shifted_product(1, g - up - 1);
      result += term;
    }
  }
  return result;
}

template <ExactDomain D>
typename D::value_type evaluate_at_q_powers(const D& d, const MultiLaurent<typename D::value_type>& p, int n, int r,
                                            int s) {
  typename D::value_type sum = d.from_int(0);
  for (const auto& [e, c] : p.terms()) {
    sum += c * d.q_power(static_cast<long>(n) * e[0] + static_cast<long>(r) * e[1] + static_cast<long>(s) * e[2]);
  }
  return sum;
}

template <ExactDomain D>
typename D::value_type a_two_explicit(const D& d, int n, int r, int s) {
  using V = typename D::value_type;
  const int g = n - r - s;
  if (g <= 0 || r <= 0 || s <= 0) throw std::invalid_argument("a_two_explicit: need r, s > 0 and genus n - r - s > 0");
  const long exponent = 2L * r * s + static_cast<long>(g - 1) * n - binom2(g);
  V prefactor = d.q_power(exponent) * (d.q_power(n) - d.from_int(1)) /
                (power(d, d.q_power(1) - d.from_int(1), g) * q_factorial(d, g));
  return prefactor * evaluate_at_q_powers(d, p_g_polynomial(d, g), n, r, s);
}

template <ExactDomain D>
typename D::value_type a_two_cell(const D& d, int n, int r, int s) {
  using V = typename D::value_type;
  if (r < 0 || s < 0 || r > n || s > n) throw std::invalid_argument("a_two_cell: need 0 <= r, s <= n");
  V sum = d.from_int(0);
  for (int t = r; t <= n; ++t) {
    const V xr = falling_to_monomial(d, t, r);
    for (int u = s; t + u <= n; ++u) {
      sum += b_two(d, n, t, u) * xr * falling_to_monomial(d, u, s);
    }
  }
  return gl_order(d, n) * sum;
}

std::string decimal_sqrt(const Rational& x, int digits) {
  if (sgn(x) < 0) throw std::domain_error("decimal_sqrt: negative argument");
  BigInt scale = big_pow(BigInt(10), static_cast<unsigned long>(2 * digits));
  BigInt scaled = x.get_num() * scale / x.get_den();
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  std::string s = root.get_str();
  if (digits == 0) return s;
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

GrowthRatio growth_ratio(int g, long q, int n) {
  if (g < 0 || n <= g) throw std::invalid_argument("growth_ratio: need 0 <= g < n");
  const NumericQ d(q);
  const int m = n - g;
  Rational total = 0;
  for (int r = 1; r <= m - 1; ++r) {
    total += g == 0 ? genus0_count(d, n, {r, m - r}) : a_two_explicit(d, n, r, m - r);
  }
  // boundary cells a_{m,0} = a_{0,m} are symmetric
  total += 2 * a_two_cell(d, n, m, 0);
  if (total.get_den() != 1) throw std::logic_error("growth_ratio: non-integral count");

  GrowthRatio out;
  out.g = g;
  out.q = q;
  out.n = n;
  out.count = total.get_num();
  Rational gl_g = gl_order(d, g);
  out.ratio_squared = total * total * gl_g * gl_g / d.q_power(static_cast<long>(n + g) * (n + g));
  out.decimal = decimal_sqrt(out.ratio_squared, 30);
  return out;
}

#define QGLF_INSTANTIATE(D)                                                                                     \
  template D::value_type m_q<D>(const D&, int, const std::vector<int>&);                                       \
  template D::value_type b_two<D>(const D&, int, int, int);                                                    \
  template D::value_type b_multi<D>(const D&, int, const std::vector<int>&);                                   \
  template D::value_type genus0_count<D>(const D&, int, const std::vector<int>&);                              \
  template D::value_type reflection_count<D>(const D&, int, int);                                              \
  template MultiLaurent<D::value_type> p_g_polynomial<D>(const D&, int);                                       \
  template D::value_type evaluate_at_q_powers<D>(const D&, const MultiLaurent<D::value_type>&, int, int, int); \
  template D::value_type a_two_explicit<D>(const D&, int, int, int);                                           \
  template D::value_type a_two_cell<D>(const D&, int, int, int);

QGLF_INSTANTIATE(SymbolicQ)
QGLF_INSTANTIATE(NumericQ)

#undef QGLF_INSTANTIATE

}  // namespace qglf
