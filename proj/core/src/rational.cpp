#include "padicvoa/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace padicvoa {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto to_integer = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("not a rational: " + std::string(text));
    return Rational(to_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational: " + std::string(text));
  }
  return Rational(to_integer(num), to_integer(den));
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= other.value_;
  return *this;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer ipow(long base, unsigned long exponent) { return ipow(Integer(base), exponent); }

long p_adic_valuation(const Integer& n, long p) {
  if (n == 0) throw std::domain_error("valuation of zero integer");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  Integer rest = abs(n);
  const Integer base(p);
  long v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), base.get_mpz_t()) != 0) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    ++v;
  }
  return v;
}

}  // namespace padicvoa
