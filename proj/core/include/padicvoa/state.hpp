#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "padicvoa/padic.hpp"
#include "padicvoa/partition.hpp"
#include "padicvoa/rational.hpp"

namespace padicvoa {

/// Finite linear combination of partition-indexed basis vectors with exact
/// rational coefficients. Zero coefficients are never stored. The tag keeps
/// Heisenberg and Virasoro states apart at the type level.
template <class Tag>
class LinearCombination {
 public:
  using Terms = std::map<Partition, Rational>;

  LinearCombination() = default;

  static LinearCombination vacuum() { return monomial(Partition{}); }
  static LinearCombination monomial(const Partition& key, const Rational& coeff = Rational(1)) {
    LinearCombination out;
    out.add_term(key, coeff);
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Partition& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += coeff * other
  void add_scaled(const LinearCombination& other, const Rational& coeff) {
    if (coeff.is_zero()) return;
    for (const auto& [key, c] : other.terms_) add_term(key, c * coeff);
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    add_scaled(other, Rational(1));
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    add_scaled(other, Rational(-1));
    return *this;
  }
  LinearCombination& operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [key, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

  /// Largest weight present; nullopt for the zero state.
  std::optional<int> max_weight() const {
    std::optional<int> out;
    for (const auto& [key, c] : terms_) {
      if (!out || key.weight() > *out) out = key.weight();
    }
    return out;
  }
  std::optional<int> min_weight() const {
    std::optional<int> out;
    for (const auto& [key, c] : terms_) {
      if (!out || key.weight() < *out) out = key.weight();
    }
    return out;
  }

  bool is_homogeneous() const { return !is_zero() && *max_weight() == *min_weight(); }

  /// Weight of a nonzero homogeneous state; throws std::domain_error otherwise.
  int weight() const {
    if (is_zero()) throw std::domain_error("weight of the zero state is undefined");
    if (!is_homogeneous()) throw std::domain_error("weight of an inhomogeneous state is undefined");
    return *max_weight();
  }

  /// Splits into homogeneous pieces, keyed by weight.
  std::map<int, LinearCombination> homogeneous_components() const {
    std::map<int, LinearCombination> out;
    for (const auto& [key, c] : terms_) out[key.weight()].terms_.emplace(key, c);
    return out;
  }

  /// Marks the state as a truncation of a completion element; every stored
  /// basis vector must have weight <= cutoff.
  const std::optional<int>& grade_cutoff() const { return grade_cutoff_; }
  void set_grade_cutoff(int cutoff) {
    if (auto w = max_weight(); w && *w > cutoff) {
      throw std::invalid_argument("grade cutoff below the state's top weight");
    }
    grade_cutoff_ = cutoff;
  }

 private:
  Terms terms_;
  std::optional<int> grade_cutoff_;
};

/// max over stored coefficients of -v_p(a_I) + e*|I|: log_p of the r-norm
/// with r = p^e. -infinity for the zero state.
template <class Tag>
NormExponent r_norm_exponent(const LinearCombination<Tag>& a, long p, long e) {
  NormExponent out = NormExponent::neg_infinity();
  for (const auto& [key, c] : a.terms()) {
    out = max(out, norm_exponent(c, p).shifted(e * key.weight()));
  }
  return out;
}

/// log_p of the sup-norm (r = 1).
template <class Tag>
NormExponent sup_norm_exponent(const LinearCombination<Tag>& a, long p) {
  return r_norm_exponent(a, p, 0);
}

/// True when every coefficient is an integer.
template <class Tag>
bool has_integer_coefficients(const LinearCombination<Tag>& a) {
  for (const auto& [key, c] : a.terms()) {
    if (!c.is_integer()) return false;
  }
  return true;
}

}  // namespace padicvoa
