#include "padicvoa/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicvoa/combinatorics.hpp"

namespace padicvoa {

QSeries::QSeries(Rational offset, int order) : offset_(std::move(offset)) {
  if (order < 0) throw std::invalid_argument("q-series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries::QSeries(Rational offset, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("q-series needs at least one coefficient");
}

QSeries QSeries::constant(const Rational& c, int order) {
  QSeries out(Rational(0), order);
  out.coeffs_[0] = c;
  return out;
}

QSeries QSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) throw std::invalid_argument("cannot truncate to that order");
  return QSeries(offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

QSeries QSeries::inverse() const {
  if (coeffs_[0].is_zero()) throw std::domain_error("q-series with zero constant term is not invertible");
  QSeries out(-offset_, order());
  const Rational inv0 = Rational(1) / coeffs_[0];
  out.coeffs_[0] = inv0;
  for (int n = 1; n <= order(); ++n) {
    Rational acc;
    for (int j = 1; j <= n; ++j) acc += (*this)[j] * out[n - j];
    out[n] = -acc * inv0;
  }
  return out;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if (a.offset_ != b.offset_) throw std::invalid_argument("adding q-series with different offsets");
  const int order = std::min(a.order(), b.order());
  QSeries out(a.offset_, order);
  for (int n = 0; n <= order; ++n) out[n] = a[n] + b[n];
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + Rational(-1) * b; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  QSeries out(a.offset_ + b.offset_, order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::string QSeries::to_string() const {
  std::string out = "q^(" + offset_.to_string() + ") * (";
  bool first = true;
  for (int n = 0; n <= order(); ++n) {
    if (coeffs_[static_cast<std::size_t>(n)].is_zero()) continue;
    if (!first) out += " + ";
    out += coeffs_[static_cast<std::size_t>(n)].to_string();
    if (n > 0) out += " q^" + std::to_string(n);
    first = false;
  }
  if (first) out += "0";
  return out + " + O(q^" + std::to_string(order() + 1) + "))";
}

NormExponent qseries_padic_distance(const QSeries& a, const QSeries& b, long p) {
  if (a.offset() != b.offset()) throw std::invalid_argument("p-adic distance between q-series with different offsets");
  return sup_norm_exponent(a - b, p);
}

NormExponent sup_norm_exponent(const QSeries& a, long p) {
  NormExponent out = NormExponent::neg_infinity();
  for (const auto& c : a.coeffs()) out = max(out, norm_exponent(c, p));
  return out;
}

QSeries eta_series(int n_max) {
  QSeries out(Rational(Integer(1), Integer(24)), n_max);
  // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers.
  out[0] = Rational(1);
  for (long k = 1;; ++k) {
    const Rational sign(k % 2 == 0 ? 1 : -1);
    const long e1 = k * (3 * k - 1) / 2;
    const long e2 = k * (3 * k + 1) / 2;
    if (e1 > n_max) break;
    out[static_cast<int>(e1)] += sign;
    if (e2 <= n_max) out[static_cast<int>(e2)] += sign;
  }
  return out;
}

QSeries eisenstein_G(int k, int n_max) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein_G: weight must be even and >= 2");
  QSeries out(Rational(0), n_max);
  out[0] = -bernoulli(k) / Rational(2L * k);
  for (int n = 1; n <= n_max; ++n) out[n] = Rational(divisor_sigma(n, static_cast<unsigned long>(k - 1)));
  return out;
}

QSeries eisenstein_G2_star(long p, int n_max) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("eisenstein_G2_star: p must be an odd prime");
  QSeries out(Rational(0), n_max);
  out[0] = Rational(Integer(p * p - 1), Integer(24));
  for (int n = 1; n <= n_max; ++n) {
    long acc = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0 && d % p != 0) acc += d;
    }
    out[n] = Rational(acc);
  }
  return out;
}

}  // namespace padicvoa
