#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "padicvoa/rational.hpp"

namespace padicvoa {

inline constexpr int kDefaultPrecision = 16;

bool is_prime(long n);

/// A p-adic valuation: an integer, or +infinity for zero.
class Valuation {
 public:
  explicit Valuation(long v) : value_(v) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  long value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v);

 private:
  Valuation() = default;
  std::optional<long> value_;
};

/// log_p of a p-adic norm: |x| = p^e. The zero norm is -infinity.
class NormExponent {
 public:
  explicit NormExponent(long e) : value_(e) {}
  static NormExponent neg_infinity() { return NormExponent(); }
  static NormExponent of(const Valuation& v) {
    return v.is_infinite() ? neg_infinity() : NormExponent(-v.value());
  }

  bool is_neg_infinity() const { return !value_.has_value(); }
  long value() const;
  /// Finite value, or `fallback` for -infinity.
  long value_or(long fallback) const { return value_.value_or(fallback); }

  /// Shift a finite exponent; -infinity is absorbing.
  NormExponent shifted(long delta) const {
    return is_neg_infinity() ? *this : NormExponent(*value_ + delta);
  }

  std::string to_string() const;

  friend bool operator==(const NormExponent&, const NormExponent&) = default;
  friend std::strong_ordering operator<=>(const NormExponent& a, const NormExponent& b);
  friend std::ostream& operator<<(std::ostream& os, const NormExponent& e);

 private:
  NormExponent() = default;
  std::optional<long> value_;
};

inline NormExponent max(const NormExponent& a, const NormExponent& b) { return a < b ? b : a; }

/// v_p(q) = v_p(numerator) - v_p(denominator); +infinity for q = 0.
Valuation valuation(const Rational& q, long p);
inline NormExponent norm_exponent(const Rational& q, long p) { return NormExponent::of(valuation(q, p)); }

/// A p-adic number x = p^v * unit, with unit known modulo p^N.
class PadicScalar {
 public:
  static PadicScalar zero(long prime, int precision = kDefaultPrecision);

  long prime() const { return prime_; }
  int precision() const { return precision_; }
  Valuation valuation() const { return valuation_; }
  const Integer& unit() const { return unit_; }
  bool is_zero() const { return valuation_.is_infinite(); }
  NormExponent norm_exponent() const { return NormExponent::of(valuation_); }

  /// The integer p^v * unit when v >= 0; throws for negative valuation.
  Integer to_integer() const;

  PadicScalar operator+(const PadicScalar& other) const;
  PadicScalar operator-() const;
  PadicScalar operator-(const PadicScalar& other) const { return *this + (-other); }
  PadicScalar operator*(const PadicScalar& other) const;

  friend bool operator==(const PadicScalar&, const PadicScalar&) = default;

  std::string to_string() const;

 private:
  friend PadicScalar padic_reduce(const Rational& q, long p, int precision);
  PadicScalar(long prime, int precision, Valuation v, Integer unit)
      : prime_(prime), precision_(precision), valuation_(v), unit_(std::move(unit)) {}

  void check_compatible(const PadicScalar& other) const;

  long prime_;
  int precision_;
  Valuation valuation_;
  Integer unit_;
};

/// Capped-precision image of q in Q_p. Throws std::invalid_argument when p
/// is not prime or precision < 1.
PadicScalar padic_reduce(const Rational& q, long p, int precision = kDefaultPrecision);

}  // namespace padicvoa
