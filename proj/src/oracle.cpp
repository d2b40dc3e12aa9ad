#include "qglf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

namespace qglf {
namespace {

using Counts = std::vector<std::uint64_t>;

void check_budget(double group_size, int k, double budget) {
  const double tuples = std::pow(group_size, k - 1);
  if (tuples > budget) {
    throw BudgetExceeded("oracle: " + std::to_string(std::llround(tuples)) + " tuples exceed the budget of " +
                         std::to_string(std::llround(budget)));
  }
}

// Visits every (k-1)-tuple of elems with the first factor restricted to
// [lo, hi), solves for the last factor, and bins by stat. Dims are packed
// in base `radix`, first factor most significant.
template <class E, class Mul, class Last, class Stat>
void count_shard(const std::vector<E>& elems, const std::vector<int>& stats, int k, std::size_t lo, std::size_t hi,
                 int radix, const Mul& mul, const Last& last, const Stat& stat, Counts& out) {
  const int depth = k - 1;
  std::vector<E> prefix;
  prefix.reserve(static_cast<std::size_t>(depth));
  std::vector<std::size_t> packed(static_cast<std::size_t>(depth + 1), 0);

  std::function<void(int)> rec = [&](int level) {
    if (level == depth) {
      const std::size_t cell = packed[static_cast<std::size_t>(level)] * static_cast<std::size_t>(radix) +
                               static_cast<std::size_t>(stat(last(prefix.back())));
      ++out[cell];
      return;
    }
    const std::size_t begin = level == 0 ? lo : 0;
    const std::size_t end = level == 0 ? hi : elems.size();
    for (std::size_t i = begin; i < end; ++i) {
      prefix.push_back(level == 0 ? elems[i] : mul(prefix.back(), elems[i]));
      packed[static_cast<std::size_t>(level + 1)] =
          packed[static_cast<std::size_t>(level)] * static_cast<std::size_t>(radix) + static_cast<std::size_t>(stats[i]);
      rec(level + 1);
      prefix.pop_back();
    }
  };
  rec(0);
}

template <class E, class Mul, class Last, class Stat>
Counts count_tuples(const std::vector<E>& elems, int k, int radix, const OracleOptions& opt, const Mul& mul,
                    const Last& last, const Stat& stat) {
  std::vector<int> stats;
  stats.reserve(elems.size());
  for (const auto& e : elems) stats.push_back(stat(e));

  std::size_t cells = 1;
  for (int i = 0; i < k; ++i) cells *= static_cast<std::size_t>(radix);

  const std::size_t shards = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(opt.threads, 1)), 1, elems.size());
  std::vector<Counts> partial(shards, Counts(cells, 0));
  auto run = [&](std::size_t s) {
    const std::size_t lo = elems.size() * s / shards;
    const std::size_t hi = elems.size() * (s + 1) / shards;
    count_shard(elems, stats, k, lo, hi, radix, mul, last, stat, partial[s]);
  };
  if (shards == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t s = 0; s < shards; ++s) pool.emplace_back(run, s);
    for (auto& t : pool) t.join();
  }
  Counts total(cells, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < cells; ++i) total[i] += p[i];
  }
  return total;
}

CountTable<BigInt> unpack(const Counts& counts, int k, int radix, int rank, std::string parameter) {
  CountTable<BigInt> table{k, rank, std::move(parameter), {}};
  for (std::size_t cell = 0; cell < counts.size(); ++cell) {
    if (counts[cell] == 0) continue;
    std::vector<int> dims(static_cast<std::size_t>(k));
    std::size_t rest = cell;
    for (int i = k - 1; i >= 0; --i) {
      dims[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(radix));
      rest /= static_cast<std::size_t>(radix);
    }
    table.add(dims, BigInt(static_cast<unsigned long>(counts[cell])));
  }
  return table;
}

using Perm = std::vector<int>;

int cycle_count(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = 1;
  }
  return cycles;
}

// (uv)(i) = u(v(i))
Perm compose(const Perm& u, const Perm& v) {
  Perm out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[static_cast<std::size_t>(v[i])];
  return out;
}

Perm invert(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

// Subspaces as bitsets over the q^m vectors (vector index = base-q digits).
using Bits = std::vector<std::uint64_t>;

struct VectorSpace {
  int m;
  long q;
  std::size_t size;  // q^m

  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t out = 0, scale = 1;
    for (int i = 0; i < m; ++i) {
      out += ((a % q + b % q) % static_cast<std::size_t>(q)) * scale;
      a /= q;
      b /= q;
      scale *= static_cast<std::size_t>(q);
    }
    return out;
  }
  std::size_t scale(std::size_t a, long c) const {
    std::size_t out = 0, s = 1;
    for (int i = 0; i < m; ++i) {
      out += ((a % q) * static_cast<std::size_t>(c) % static_cast<std::size_t>(q)) * s;
      a /= q;
      s *= static_cast<std::size_t>(q);
    }
    return out;
  }
  static bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

  Bits span_with(const Bits& w, std::size_t v) const {
    Bits out = w;
    for (long c = 1; c < q; ++c) {
      const std::size_t cv = scale(v, c);
      for (std::size_t x = 0; x < size; ++x) {
        if (test(w, x)) set(out, add(x, cv));
      }
    }
    return out;
  }
};

std::vector<std::vector<Bits>> subspaces_by_dim(const VectorSpace& vs) {
  const std::size_t words = (vs.size + 63) / 64;
  std::vector<std::vector<Bits>> out(static_cast<std::size_t>(vs.m + 1));
  Bits zero(words, 0);
  VectorSpace::set(zero, 0);
  out[0].push_back(zero);
  for (int r = 0; r < vs.m; ++r) {
    std::set<Bits> next;
    for (const auto& w : out[static_cast<std::size_t>(r)]) {
      for (std::size_t v = 1; v < vs.size; ++v) {
        if (!VectorSpace::test(w, v)) next.insert(vs.span_with(w, v));
      }
    }
    out[static_cast<std::size_t>(r + 1)].assign(next.begin(), next.end());
  }
  return out;
}

}  // namespace

CountTable<BigInt> brute_count_gl(int n, long q, int k, const MatrixFq& c, const OracleOptions& opt) {
  if (k < 1) throw std::invalid_argument("brute_count_gl: k must be positive");
  if (c.n() != n || static_cast<long>(c.q()) != q) throw std::invalid_argument("brute_count_gl: c has the wrong shape");
  if (!is_regular_elliptic(c)) throw std::invalid_argument("brute_count_gl: c is not regular elliptic");
  const double size = group_order(n, q).get_d();
  check_budget(size, k, opt.budget);
  if (k == 1) {
    CountTable<BigInt> table{1, n, std::to_string(q), {}};
    table.add({fixed_dim(c)}, BigInt(1));
    return table;
  }
  const auto group = enumerate_gl(n, q);
  auto mul = [](const MatrixFq& a, const MatrixFq& b) { return a * b; };
  auto last = [&c](const MatrixFq& prefix) { return prefix.inverse() * c; };
  auto stat = [](const MatrixFq& m) { return fixed_dim(m); };
  const Counts counts = count_tuples(group, k, n + 1, opt, mul, last, stat);
  return unpack(counts, k, n + 1, n, std::to_string(q));
}

CountTable<BigInt> brute_count_sn(int n, int k, const OracleOptions& opt) {
  if (n < 1 || k < 1) throw std::invalid_argument("brute_count_sn: need n >= 1 and k >= 1");
  double size = 1;
  for (int i = 2; i <= n; ++i) size *= i;
  check_budget(size, k, opt.budget);
  Perm c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
  if (k == 1) {
    CountTable<BigInt> table{1, n, "Sn", {}};
    table.add({cycle_count(c)}, BigInt(1));
    return table;
  }
  std::vector<Perm> group;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    group.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto last = [&c](const Perm& prefix) { return compose(invert(prefix), c); };
  const Counts counts = count_tuples(group, k, n + 1, opt, compose, last, cycle_count);
  return unpack(counts, k, n + 1, n, "Sn");
}

BigInt surjection_count(int d, int r, long q) {
  if (r > d) return 0;
  BigInt qd, qi = 1, out = 1;
  mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
  for (int i = 0; i < r; ++i) {
    out *= qd - qi;
    qi *= q;
  }
  return out;
}

BigInt colored_count(int n, long q, int r, int s, const OracleOptions& opt) {
  const auto table = brute_count_gl(n, q, 2, find_regular_elliptic(n, q, false), opt);
  std::map<std::pair<int, int>, BigInt> surj;
  auto weight = [&](int d, int x) -> const BigInt& {
    auto [it, inserted] = surj.try_emplace({d, x});
    if (inserted) it->second = surjection_count(d, x, q);
    return it->second;
  };
  BigInt sum = 0;
  for (const auto& [dims, count] : table.entries) sum += count * weight(dims[0], r) * weight(dims[1], s);
  return sum;
}

BigInt subspace_meet_count(int m, long q, const std::vector<int>& rs, const OracleOptions& opt) {
  if (m < 0 || !is_prime(q)) throw std::invalid_argument("subspace_meet_count: need m >= 0 and q prime");
  for (int r : rs) {
    if (r < 0) throw std::invalid_argument("subspace_meet_count: negative dimension");
    if (r > m) return 0;
  }
  VectorSpace vs{m, q, 1};
  for (int i = 0; i < m; ++i) vs.size *= static_cast<std::size_t>(q);
  if (static_cast<double>(vs.size) > 4096) throw BudgetExceeded("subspace_meet_count: q^m too large");
  const auto spaces = subspaces_by_dim(vs);
  double tuples = 1;
  for (int r : rs) tuples *= static_cast<double>(spaces[static_cast<std::size_t>(r)].size());
  if (tuples > opt.budget) throw BudgetExceeded("subspace_meet_count: tuple count exceeds the budget");

  const std::size_t words = (vs.size + 63) / 64;
  Bits trivial(words, 0);
  VectorSpace::set(trivial, 0);
  BigInt count = 0;
  std::function<void(std::size_t, const Bits&)> rec = [&](std::size_t i, const Bits& meet) {
    if (i == rs.size()) {
      if (meet == trivial) ++count;
      return;
    }
    for (const auto& w : spaces[static_cast<std::size_t>(rs[i])]) {
      Bits next(words);
      for (std::size_t j = 0; j < words; ++j) next[j] = meet[j] & w[j];
      rec(i + 1, next);
    }
  };
  Bits all(words, 0);
  for (std::size_t v = 0; v < vs.size; ++v) VectorSpace::set(all, v);
  rec(0, all);
  return count;
}

BigInt subset_meet_count(int m, const std::vector<int>& rs) {
  if (m < 0 || m > 20) throw std::invalid_argument("subset_meet_count: need 0 <= m <= 20");
  std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(m + 1));
  for (std::uint32_t s = 0; s < (1U << m); ++s) by_size[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
  for (int r : rs) {
    if (r < 0 || r > m) return 0;
  }
  BigInt count = 0;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t meet) {
    if (i == rs.size()) {
      if (meet == 0) ++count;
      return;
    }
    for (std::uint32_t s : by_size[static_cast<std::size_t>(rs[i])]) rec(i + 1, meet & s);
  };
  rec(0, m == 0 ? 0U : (1U << m) - 1);
  return count;
}

GenusHistogram genus_stats(int n, long q, int k, const OracleOptions& opt) {
  const auto table = brute_count_gl(n, q, k, find_regular_elliptic(n, q, false), opt);
  GenusHistogram h;
  for (const auto& [dims, count] : table.entries) {
    const int g = (k - 1) * n - std::accumulate(dims.begin(), dims.end(), 0);
    h[g] += count;
  }
  return h;
}

Rational mean_genus(const GenusHistogram& h) {
  BigInt weighted = 0, total = 0;
  for (const auto& [g, count] : h) {
    weighted += g * count;
    total += count;
  }
  if (total == 0) throw std::domain_error("mean_genus: empty histogram");
  Rational out(weighted, total);
  out.canonicalize();
  return out;
}

std::vector<BigInt> fixed_dim_census(int n, long q) {
  std::vector<BigInt> out(static_cast<std::size_t>(n + 1), 0);
  for (const auto& g : enumerate_gl(n, q)) ++out[static_cast<std::size_t>(fixed_dim(g))];
  return out;
}

}  // namespace qglf
