#include "qglf/genfun.hpp"

#include <stdexcept>

#include "qglf/coeffs.hpp"
#include "qglf/qcalc.hpp"

namespace qglf {

template <ExactDomain D>
typename D::value_type char_zr(const D& d, int n, CharKind kind, int r) {
  using V = typename D::value_type;
  if (n < 1 || r < 0 || r > n) throw std::invalid_argument("char_zr: need n >= 1 and 0 <= r <= n");
  const V one = d.from_int(1);
  V sign_and_power = d.q_power(binom2(n - r));
  if ((n - r) % 2 == 1) sign_and_power = -sign_and_power;
  if (kind.type == CharKind::Type::GenericCuspidal) return sign_and_power * q_binomial(d, n, r);

  const int hook = kind.d;
  if (hook < 0 || hook > n - 1) throw std::invalid_argument("char_zr: hook leg must lie in [0, n-1]");
  V inner = d.from_int(0);
  for (int j = 1; j <= n - std::max(r, hook); ++j) {
    inner += d.q_power(static_cast<long>(j) * r - hook) * q_factorial(d, n - j) / q_factorial(d, n - r - j) *
             q_pochhammer(d, d.q_power(n - hook - j + 1), 1, j - 1);
  }
  V correction = (one - d.q_power(1)) * q_integer(d, n) / q_factorial(d, r) * inner;
  return sign_and_power * (q_binomial(d, n, r) + correction);
}

template <ExactDomain D>
typename D::value_type hook_degree(const D& d, int n, int hook) {
  if (hook < 0 || hook > n - 1) throw std::invalid_argument("hook_degree: hook leg must lie in [0, n-1]");
  return d.q_power(binom2(hook + 1)) * q_binomial(d, n - 1, hook);
}

template <ExactDomain D>
typename D::value_type hook_regular_sum(const D& d, int n) {
  typename D::value_type sum = d.from_int(0);
  for (int hook = 0; hook <= n - 1; ++hook) {
    if (hook_value_on_elliptic(hook) > 0) {
      sum += hook_degree(d, n, hook);
    } else {
      sum -= hook_degree(d, n, hook);
    }
  }
  return sum;
}

template <ExactDomain D>
CharSeries<typename D::value_type> f_easy(const D& d, int n) {
  using V = typename D::value_type;
  if (n < 1) throw std::invalid_argument("f_easy: n must be positive");
  CharSeries<V> f{n, CharKind::generic(), std::vector<V>(static_cast<std::size_t>(n + 1), d.from_int(0))};
  f.falling[static_cast<std::size_t>(n)] = gl_order(d, n);
  return f;
}

template <ExactDomain D>
CharSeries<typename D::value_type> f_hook(const D& d, int n, int hook) {
  using V = typename D::value_type;
  if (n < 1 || hook < 0 || hook > n - 1) throw std::invalid_argument("f_hook: need n >= 1 and 0 <= d <= n-1");
  const V order = gl_order(d, n);
  CharSeries<V> f{n, CharKind::hook(hook), std::vector<V>(static_cast<std::size_t>(n + 1), d.from_int(0))};
  f.falling[static_cast<std::size_t>(n)] = order;
  const V scale = order * d.q_power(-hook) * q_factorial(d, n - hook - 1) / q_factorial(d, n - 1);
  for (int m = hook; m <= n - 1; ++m) {
    f.falling[static_cast<std::size_t>(m)] = scale * q_factorial(d, m) / q_factorial(d, m - hook);
  }
  return f;
}

template <ExactDomain D>
XPoly<typename D::value_type> to_monomial(const D& d, const CharSeries<typename D::value_type>& f) {
  using V = typename D::value_type;
  std::vector<V> coeffs(static_cast<std::size_t>(f.n + 1), d.from_int(0));
  for (int t = 0; t <= f.n; ++t) {
    const V& c = f.falling[static_cast<std::size_t>(t)];
    if (D::is_zero(c)) continue;
    for (int r = 0; r <= t; ++r) coeffs[static_cast<std::size_t>(r)] += c * falling_to_monomial(d, t, r);
  }
  return XPoly<V>(std::move(coeffs));
}

template <ExactDomain D>
XSeries<typename D::value_type> assemble_F(const D& d, int n, int k) {
  using V = typename D::value_type;
  if (n < 1 || k < 1) throw std::invalid_argument("assemble_F: need n >= 1 and k >= 1");
  const V order = gl_order(d, n);
  const std::size_t width = static_cast<std::size_t>(n + 1);

  // Per-character falling coefficients of f_V / |G|.
  std::vector<V> generic(width, d.from_int(0));
  {
    const auto f = f_easy(d, n);
    for (std::size_t t = 0; t < width; ++t) generic[t] = f.falling[t] / order;
  }
  std::vector<std::vector<V>> hooks;
  std::vector<V> weights;  // deg(V) chi_V(c^{-1})
  for (int hook = 0; hook <= n - 1; ++hook) {
    const auto f = f_hook(d, n, hook);
    std::vector<V> row(width, d.from_int(0));
    for (std::size_t t = 0; t < width; ++t) row[t] = f.falling[t] / order;
    hooks.push_back(std::move(row));
    V w = hook_degree(d, n, hook);
    weights.push_back(hook_value_on_elliptic(hook) > 0 ? w : V(-w));
  }
  // Non-hook characters contribute -(hook part of the regular character).
  const V generic_weight = -hook_regular_sum(d, n);

  XSeries<V> out{k, n, Basis::Falling, {}};
  for (const auto& index : all_dim_vectors(k, 0, n)) {
    V value = d.from_int(0);
    auto add_product = [&](const V& weight, const std::vector<V>& row) {
      V term = weight;
      for (int p : index) {
        const V& c = row[static_cast<std::size_t>(p)];
        if (D::is_zero(c)) return;
        term *= c;
      }
      value += term;
    };
    add_product(generic_weight, generic);
    for (std::size_t h = 0; h < hooks.size(); ++h) add_product(weights[h], hooks[h]);
    out.add(index, value);
  }
  return out;
}

template <ExactDomain D>
XSeries<typename D::value_type> closed_form_F(const D& d, int n, int k) {
  using V = typename D::value_type;
  if (n < 1 || k < 1) throw std::invalid_argument("closed_form_F: need n >= 1 and k >= 1");
  XSeries<V> out{k, n, Basis::Falling, {}};
  for (const auto& index : all_dim_vectors(k, 0, n)) {
    out.add(index, k == 2 ? b_two(d, n, index[0], index[1]) : b_multi(d, n, index));
  }
  return out;
}

template <ExactDomain D>
CountTable<typename D::value_type> a_table(const D& d, int n, int k, Path path) {
  using V = typename D::value_type;
  XSeries<V> falling = path == Path::ClosedForm ? closed_form_F(d, n, k) : assemble_F(d, n, k);
  XSeries<V> mono = change_basis(d, falling, Basis::Monomial);
  V scale = d.from_int(1);
  const V order = gl_order(d, n);
  for (int i = 1; i < k; ++i) scale *= order;
  CountTable<V> table{k, n, d.label(), {}};
  for (const auto& [index, value] : mono.terms) table.add(index, value * scale);
  return table;
}

template <ExactDomain D>
std::vector<typename D::value_type> fulman_series(const D& d, int n) {
  using V = typename D::value_type;
  if (n < 1) throw std::invalid_argument("fulman_series: n must be positive");
  const V order = gl_order(d, n);
  std::vector<V> out;
  for (int r = 0; r <= n; ++r) {
    V sum = d.from_int(0);
    for (int t = r; t <= n; ++t) sum += falling_to_monomial(d, t, r);
    out.push_back(order * sum);
  }
  return out;
}

template <ExactDomain D>
typename D::value_type expected_genus(const D& d, int n) {
  using V = typename D::value_type;
  if (n < 1) throw std::invalid_argument("expected_genus: n must be positive");
  V sum = d.from_int(0);
  for (int t = 1; t <= n; ++t) {
    V term = d.from_int(1) / (d.q_power(binom2(t)) * (d.from_int(1) - d.q_power(t)));
    sum += t % 2 == 0 ? term : V(-term);
  }
  return d.from_int(n) - d.from_int(2) * sum;
}

#define QGLF_INSTANTIATE(D)                                                                               \
  template D::value_type char_zr<D>(const D&, int, CharKind, int);                                       \
  template D::value_type hook_degree<D>(const D&, int, int);                                             \
  template D::value_type hook_regular_sum<D>(const D&, int);                                             \
  template CharSeries<D::value_type> f_easy<D>(const D&, int);                                           \
  template CharSeries<D::value_type> f_hook<D>(const D&, int, int);                                      \
  template XPoly<D::value_type> to_monomial<D>(const D&, const CharSeries<D::value_type>&);              \
  template XSeries<D::value_type> assemble_F<D>(const D&, int, int);                                     \
  template XSeries<D::value_type> closed_form_F<D>(const D&, int, int);                                  \
  template CountTable<D::value_type> a_table<D>(const D&, int, int, Path);                               \
  template std::vector<D::value_type> fulman_series<D>(const D&, int);                                   \
  template D::value_type expected_genus<D>(const D&, int);

QGLF_INSTANTIATE(SymbolicQ)
QGLF_INSTANTIATE(NumericQ)

#undef QGLF_INSTANTIATE

}  // namespace qglf
