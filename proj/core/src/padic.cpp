#include "padicvoa/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicvoa {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

long Valuation::value() const {
  if (!value_) throw std::logic_error("infinite valuation has no integer value");
  return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return *a.value_ <=> *b.value_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  return v.is_infinite() ? (os << "+inf") : (os << v.value());
}

long NormExponent::value() const {
  if (!value_) throw std::logic_error("norm exponent is -infinity");
  return *value_;
}

std::string NormExponent::to_string() const {
  return is_neg_infinity() ? std::string("-inf") : std::to_string(*value_);
}

std::strong_ordering operator<=>(const NormExponent& a, const NormExponent& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) {
    return static_cast<int>(b.is_neg_infinity()) <=> static_cast<int>(a.is_neg_infinity());
  }
  return *a.value_ <=> *b.value_;
}

std::ostream& operator<<(std::ostream& os, const NormExponent& e) { return os << e.to_string(); }

Valuation valuation(const Rational& q, long p) {
  if (q.is_zero()) return Valuation::infinity();
  return Valuation(p_adic_valuation(q.numerator(), p) - p_adic_valuation(q.denominator(), p));
}

namespace {

Integer strip(const Integer& n, long p, long& removed) {
  Integer rest;
  const Integer base(p);
  removed = static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t()));
  return rest;
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

PadicScalar PadicScalar::zero(long prime, int precision) { return padic_reduce(Rational(0), prime, precision); }

PadicScalar padic_reduce(const Rational& q, long p, int precision) {
  if (!is_prime(p)) throw std::invalid_argument("padic_reduce: " + std::to_string(p) + " is not prime");
  if (precision < 1) throw std::invalid_argument("padic_reduce: precision must be >= 1");
  if (q.is_zero()) return PadicScalar(p, precision, Valuation::infinity(), Integer(0));

  long vn = 0;
  long vd = 0;
  const Integer num = strip(q.numerator(), p, vn);
  const Integer den = strip(q.denominator(), p, vd);
  const Integer modulus = ipow(p, static_cast<unsigned long>(precision));

  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer unit = mod_positive(num * den_inv, modulus);
  return PadicScalar(p, precision, Valuation(vn - vd), std::move(unit));
}

void PadicScalar::check_compatible(const PadicScalar& other) const {
  if (prime_ != other.prime_) throw std::invalid_argument("p-adic scalars over different primes");
}

Integer PadicScalar::to_integer() const {
  if (is_zero()) return Integer(0);
  const long v = valuation_.value();
  if (v < 0) throw std::domain_error("p-adic scalar with negative valuation is not integral");
  return ipow(prime_, static_cast<unsigned long>(v)) * unit_;
}

// Capped relative precision: cancellation in a sum loses low digits of the
// unit, and the result keeps the smaller of the two precisions.
PadicScalar PadicScalar::operator+(const PadicScalar& other) const {
  check_compatible(other);
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  const int precision = std::min(precision_, other.precision_);
  const Integer modulus = ipow(prime_, static_cast<unsigned long>(precision));
  const long va = valuation_.value();
  const long vb = other.valuation_.value();
  const long v = std::min(va, vb);
  const Integer sum = unit_ * ipow(prime_, static_cast<unsigned long>(va - v)) +
                      other.unit_ * ipow(prime_, static_cast<unsigned long>(vb - v));
  const Integer reduced = mod_positive(sum, modulus);
  if (reduced == 0) return PadicScalar(prime_, precision, Valuation::infinity(), Integer(0));
  long k = 0;
  Integer unit = strip(reduced, prime_, k);
  return PadicScalar(prime_, precision, Valuation(v + k), mod_positive(unit, modulus));
}

PadicScalar PadicScalar::operator-() const {
  if (is_zero()) return *this;
  const Integer modulus = ipow(prime_, static_cast<unsigned long>(precision_));
  return PadicScalar(prime_, precision_, valuation_, mod_positive(-unit_, modulus));
}

PadicScalar PadicScalar::operator*(const PadicScalar& other) const {
  check_compatible(other);
  const int precision = std::min(precision_, other.precision_);
  if (is_zero() || other.is_zero()) return PadicScalar(prime_, precision, Valuation::infinity(), Integer(0));
  const Integer modulus = ipow(prime_, static_cast<unsigned long>(precision));
  return PadicScalar(prime_, precision, Valuation(valuation_.value() + other.valuation_.value()),
                     mod_positive(unit_ * other.unit_, modulus));
}

std::string PadicScalar::to_string() const {
  if (is_zero()) return "0 + O(" + std::to_string(prime_) + "^" + std::to_string(precision_) + ")";
  const long v = valuation_.value();
  return std::to_string(prime_) + "^" + std::to_string(v) + " * " + unit_.get_str() + " + O(" +
         std::to_string(prime_) + "^" + std::to_string(v + precision_) + ")";
}

}  // namespace padicvoa
