#pragma once

#include <string>
#include <vector>

#include "padicvoa/padic.hpp"
#include "padicvoa/rational.hpp"

namespace padicvoa {

/// Truncated q-expansion q^offset * sum_{n=0}^{order} a_n q^n with exact
/// rational coefficients and a symbolic rational exponent offset.
class QSeries {
 public:
  /// Zero series of the given order.
  QSeries(Rational offset, int order);
  QSeries(Rational offset, std::vector<Rational> coeffs);

  static QSeries one(int order) { return constant(Rational(1), order); }
  static QSeries constant(const Rational& c, int order);

  const Rational& offset() const { return offset_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// Truncates to a lower order.
  QSeries truncated(int order) const;
  /// Multiplicative inverse; needs a nonzero constant term. Offset negates.
  QSeries inverse() const;

  QSeries& operator*=(const Rational& s);
  /// Addition needs equal offsets (std::invalid_argument otherwise); the
  /// result has the smaller order.
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  /// Offsets add; the result has the smaller order.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }

  friend bool operator==(const QSeries&, const QSeries&) = default;

  std::string to_string() const;

 private:
  Rational offset_;
  std::vector<Rational> coeffs_;
};

/// max over n <= min(order) of -v_p(A_n - B_n); -infinity when identical.
/// Throws std::invalid_argument on an offset mismatch.
NormExponent qseries_padic_distance(const QSeries& a, const QSeries& b, long p);

/// Coefficientwise p-adic sup-norm exponent.
NormExponent sup_norm_exponent(const QSeries& a, long p);

/// Dedekind eta, q^(1/24) prod_{n>=1} (1 - q^n), via the pentagonal
/// number theorem.
QSeries eta_series(int n_max);

/// G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n for even k >= 2.
QSeries eisenstein_G(int k, int n_max);

/// (p^2 - 1)/24 + sum_{n>=1} sigma*(n) q^n, sigma* summing the divisors of
/// n prime to p. p must be an odd prime.
QSeries eisenstein_G2_star(long p, int n_max);

}  // namespace padicvoa
