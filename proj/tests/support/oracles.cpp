#include "oracles.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

std::vector<Integer> partition_counts(int n_max, int min_part) {
  std::vector<Integer> c(static_cast<std::size_t>(n_max) + 1, 0);
  c[0] = 1;
  for (int k = min_part; k <= n_max; ++k) {
    for (int n = k; n <= n_max; ++n) c[n] += c[n - k];
  }
  return c;
}

Rational bernoulli(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(Integer(1), Integer(m + 1));
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return n == 1 ? -a[0] : a[0];
}

Integer binomial(long t, long i) {
  if (i < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long j = 0; j < i; ++j) {
    num *= t - j;
    den *= j + 1;
  }
  return num / den;
}

Integer stirling2(int n, int k) {
  Integer sum = 0;
  Integer fact = 1;
  for (int j = 1; j <= k; ++j) fact *= j;
  for (int j = 0; j <= k; ++j) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
    const Integer term = binomial(k, j) * power;
    if ((k - j) % 2 == 0) sum += term; else sum -= term;
  }
  return sum / fact;
}

Integer divisor_sum(long n, int power) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer t = 1;
    for (int e = 0; e < power; ++e) t *= d;
    s += t;
  }
  return s;
}

Integer divisor_sum_prime_to(long n, long p) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0 && d % p != 0) s += d;
  }
  return s;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r0 = m, r1 = ((a % m) + m) % m;
  Integer t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Integer t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw std::domain_error("not invertible");
  return ((t0 % m) + m) % m;
}

std::vector<Integer> euler_product(int n_max) {
  std::vector<Integer> c(static_cast<std::size_t>(n_max) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n_max; ++k) {
    for (int n = n_max; n >= k; --n) c[n] -= c[n - k];
  }
  return c;
}

namespace {

// Monomials as multiplicity maps, independent of Partition's operations.
using Mono = std::map<int, int>;

Partition to_partition(const Mono& m) {
  std::vector<int> parts;
  for (const auto& [part, mult] : m) parts.insert(parts.end(), mult, part);
  return Partition(parts);
}

Mono from_partition(const Partition& p) {
  Mono m;
  for (int part : p.parts()) ++m[part];
  return m;
}

}  // namespace

HeisenbergState normal_ordered_mode(const Partition& u, int n, const Partition& b) {
  const std::vector<int>& k = u.parts();
  const int wu = u.weight();
  const int wb = b.weight();
  HeisenbergState out;
  if (k.empty()) {
    if (n == -1) out.add_term(b, Rational(1));
    return out;
  }
  const int total = n + 1 - wu;  // sum of the mode indices
  const int out_weight = wu + wb - n - 1;
  if (out_weight < 0) return out;
  std::vector<int> modes(k.size());
  // Modes range over nonzero m with -out_weight <= m <= wb.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
    if (i == k.size()) {
      if (sum != total) return;
      Integer coeff = 1;
      for (std::size_t j = 0; j < k.size(); ++j) coeff *= binomial(-modes[j] - 1, k[j] - 1);
      if (coeff == 0) return;
      // Annihilators first: h_m with m > 0 acts as m d/dh_{-m}.
      Mono state = from_partition(b);
      Rational c(coeff);
      for (std::size_t j = 0; j < k.size(); ++j) {
        const int m = modes[j];
        if (m <= 0) continue;
        auto it = state.find(m);
        if (it == state.end()) return;
        c *= Rational(static_cast<long>(m) * it->second);
        if (--it->second == 0) state.erase(it);
      }
      for (std::size_t j = 0; j < k.size(); ++j) {
        if (modes[j] < 0) ++state[-modes[j]];
      }
      out.add_term(to_partition(state), c);
      return;
    }
    for (int m = -out_weight; m <= wb; ++m) {
      if (m == 0) continue;
      modes[i] = m;
      rec(i + 1, sum + m);
    }
  };
  rec(0, 0);
  return out;
}

namespace {

// Laurent series sum_{j >= low} c_j z^j, kept to absolute order < high.
struct Laurent {
  int low;
  std::vector<Rational> c;

  Rational at(int j) const {
    const int idx = j - low;
    return idx >= 0 && idx < static_cast<int>(c.size()) ? c[idx] : Rational(0);
  }
};

Laurent multiply(const Laurent& a, const Laurent& b, int high) {
  Laurent out{a.low + b.low, {}};
  const int len = high - out.low;
  out.c.assign(static_cast<std::size_t>(std::max(len, 0)), Rational(0));
  for (int i = 0; i < static_cast<int>(a.c.size()); ++i) {
    for (int j = 0; j < static_cast<int>(b.c.size()); ++j) {
      const int idx = i + j;
      if (idx < len) out.c[idx] += a.c[i] * b.c[j];
    }
  }
  return out;
}

Laurent exp_series(int high) {
  Laurent e{0, {}};
  Integer fact = 1;
  for (int j = 0; j < high; ++j) {
    if (j > 0) fact *= j;
    e.c.push_back(Rational(Integer(1), fact));
  }
  return e;
}

// Power series inverse of g with g(0) != 0.
Laurent inverse_series(const Laurent& g, int len) {
  std::vector<Rational> inv(static_cast<std::size_t>(len));
  inv[0] = Rational(1) / g.c[0];
  for (int n = 1; n < len; ++n) {
    Rational s;
    for (int j = 1; j <= n && j < static_cast<int>(g.c.size()); ++j) s += g.c[j] * inv[n - j];
    inv[n] = -s / g.c[0];
  }
  return Laurent{0, inv};
}

}  // namespace

HeisenbergState square_bracket_by_substitution(int r) {
  // Coefficient of z^{r-1} is needed; series are kept past that order.
  const int high = r + 4;
  const Laurent e = exp_series(high + 4);
  // e^z - 1 = z g(z)
  Laurent g{0, {}};
  for (std::size_t j = 1; j < e.c.size(); ++j) g.c.push_back(e.c[j]);
  const Laurent x{1, g.c};

  // Y(h, x) h(-1)|0> = sum_{m >= 0} h(-m-1)h(-1)|0> x^m + |0> x^{-2};
  // h(0) kills h(-1)|0> and h(n) with n >= 2 lowers past the vacuum.
  HeisenbergState out;
  Integer fact = 1;
  for (int j = 2; j < r; ++j) fact *= j;

  Laurent xm{0, {Rational(1)}};
  for (int m = 0; m <= r; ++m) {
    const Laurent term = multiply(e, xm, high);
    const Rational c = term.at(r - 1) * Rational(fact);
    if (!c.is_zero()) out.add_term(Partition{m + 1, 1}, c);
    xm = multiply(xm, x, high + 2);
  }
  const Laurent ginv = inverse_series(g, high + 4);
  Laurent xinv2 = multiply(ginv, ginv, high + 4);
  xinv2.low = -2;
  const Laurent term = multiply(e, xinv2, high);
  out.add_term(Partition{}, term.at(r - 1) * Rational(fact));
  return out;
}

}  // namespace oracle
