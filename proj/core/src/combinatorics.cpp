#include "padicvoa/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace padicvoa {

Integer gen_binomial(long t, long i) {
  if (i < 0) throw std::invalid_argument("gen_binomial: lower index must be >= 0");
  Integer num(1);
  Integer den(1);
  for (long j = 0; j < i; ++j) {
    num *= Integer(t - j);
    den *= Integer(j + 1);
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

namespace {

struct BernoulliTable {
  std::shared_mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

Rational bernoulli(long k) {
  if (k < 0) throw std::invalid_argument("bernoulli: index must be >= 0");
  auto& table = bernoulli_table();
  {
    std::shared_lock lock(table.mutex);
    if (static_cast<std::size_t>(k) < table.values.size()) return table.values[static_cast<std::size_t>(k)];
  }
  std::unique_lock lock(table.mutex);
  auto& b = table.values;
  while (b.size() <= static_cast<std::size_t>(k)) {
    const long n = static_cast<long>(b.size());
    if (n >= 3 && n % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j
    mpq_class acc;
    Integer binom(1);  // C(n+1, j), updated incrementally
    for (long j = 0; j < n; ++j) {
      if (!b[static_cast<std::size_t>(j)].is_zero()) acc += mpq_class(binom) * b[static_cast<std::size_t>(j)].raw();
      binom = binom * Integer(n + 1 - j) / Integer(j + 1);
    }
    acc /= -(n + 1);
    b.emplace_back(acc);
  }
  return b[static_cast<std::size_t>(k)];
}

Integer stirling2(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
  if (k > n) return Integer(0);
  // Row recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1).
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, Integer(0));
  row[0] = 1;
  for (long i = 1; i <= n; ++i) {
    const long top = std::min(i, k);
    for (long j = top; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = Integer(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

Integer c_coefficient(long r, long m) {
  if (r < 1 || m < 0) throw std::invalid_argument("c_coefficient: need r >= 1 and m >= 0");
  Integer acc(0);
  Integer binom(1);  // C(m, j)
  for (long j = 0; j <= m; ++j) {
    const Integer term = binom * ipow(j + 1, static_cast<unsigned long>(r - 1));
    if ((m + j) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
    binom = binom * Integer(m - j) / Integer(j + 1);
  }
  return acc;
}

Integer divisor_sigma(long n, unsigned long power) {
  if (n < 1) throw std::invalid_argument("divisor_sigma: n must be positive");
  Integer acc(0);
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc += ipow(d, power);
    if (d != n / d) acc += ipow(n / d, power);
  }
  return acc;
}

}  // namespace padicvoa
