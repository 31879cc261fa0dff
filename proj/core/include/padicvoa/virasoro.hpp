#pragma once

#include <memory>
#include <string>
#include <vector>

#include "padicvoa/axioms.hpp"
#include "padicvoa/state.hpp"

namespace padicvoa {

struct VirasoroTag {};

/// Element of V = W/W_1: a combination of PBW words
/// L(-n1)...L(-nr)v0 with n1 >= ... >= nr >= 2.
using VirasoroState = LinearCombination<VirasoroTag>;

/// The Virasoro vertex algebra with quasicentral charge c' = c/2, so that
///   [L(m), L(n)] = (m-n) L(m+n) + delta_{m+n,0} C(m+1, 3) c'.
/// Copies share their memo caches.
class VirasoroVoa {
 public:
  using State = VirasoroState;

  explicit VirasoroVoa(Rational quasicentral_charge);

  const Rational& quasicentral_charge() const { return cprime_; }
  Rational central_charge() const { return Rational(2) * cprime_; }

  State vacuum() const { return State::vacuum(); }
  /// omega = L(-2)v0.
  State omega() const { return State::monomial(Partition{2}); }

  /// PBW words of the given grade: partitions into parts >= 2.
  static std::vector<Partition> pbw_basis(int grade);
  static std::vector<State> basis_states_up_to(int max_grade);

  /// L(n) s, rewritten to PBW normal form. Words that reach L(-1)v0 lie in
  /// W_1 and are dropped.
  State apply_L(int n, const State& s) const;

  /// v(n)b via the associator recursion on v = L(-k)u = omega(1-k)u with
  /// Y(omega, z) = sum L(n) z^{-n-2}.
  State mode(const State& v, int n, const State& b) const;

 private:
  struct Caches;

  State apply_L_word(int n, const Partition& word) const;
  State mode_on_words(const Partition& u, int n, const Partition& b) const;

  Rational cprime_;
  std::shared_ptr<Caches> caches_;
};

/// [L(m), L(n)]s - (m-n) L(m+n)s - delta_{m+n,0} C(m+1, 3) c' s.
DefectReport<VirasoroState> vir_bracket_defect(const VirasoroVoa& voa, int m, int n, const VirasoroState& s, long p);

/// Canonical text, e.g. `L(-3) L(-2) |0>`.
std::string to_string(const VirasoroState& state);

}  // namespace padicvoa
