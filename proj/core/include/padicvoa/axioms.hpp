#pragma once

#include <concepts>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "padicvoa/fock.hpp"
#include "padicvoa/modes.hpp"
#include "padicvoa/truncation.hpp"

namespace padicvoa {

using Parameters = std::vector<std::pair<std::string, long>>;

/// An exact defect state together with its p-adic sup-norm exponent;
/// norm_exponent is -infinity exactly when the defect vanishes.
template <class State>
struct DefectReport {
  State defect;
  NormExponent norm_exponent = NormExponent::neg_infinity();
  Parameters parameters;
  std::string description;

  bool is_zero() const { return defect.is_zero(); }
};

template <class State>
DefectReport<State> make_report(State defect, long p, Parameters parameters, std::string description) {
  const NormExponent e = sup_norm_exponent(defect, p);
  return DefectReport<State>{std::move(defect), e, std::move(parameters), std::move(description)};
}

/// A graded vertex algebra with nonnegative grading whose modes can be
/// evaluated exactly on finitely supported states.
template <class A>
concept VertexAlgebraModel = requires(const A& alg, const typename A::State& s, int n) {
  { alg.mode(s, n, s) } -> std::same_as<typename A::State>;
  { alg.vacuum() } -> std::same_as<typename A::State>;
  { s.max_weight() };
};

struct HeisenbergModel {
  using State = HeisenbergState;
  State mode(const State& v, int n, const State& b) const { return mode_action(v, n, b); }
  State vacuum() const { return State::vacuum(); }
};

struct LocalityPoint {
  int t;
  NormExponent norm_exponent;
};

/// Exact defects of the vertex algebra identities. Every infinite sum is cut
/// at the index where the grading forces its terms to vanish.
template <VertexAlgebraModel A>
class AxiomLab {
 public:
  using State = typename A::State;

  AxiomLab(A algebra, long prime) : algebra_(std::move(algebra)), prime_(prime) {}

  const A& algebra() const { return algebra_; }
  long prime() const { return prime_; }

  /// sum_i C(r, i) (u(t+i)v)(r+s-i)w
  State jacobi_lhs(const State& u, const State& v, const State& w, int r, int s, int t) const {
    const int last = truncation::last_index(r, {wt(u) + wt(v) - t});
    State out;
    for (int i = 0; i <= last; ++i) {
      const Integer c = gen_binomial(r, i);
      if (c == 0) continue;
      const State uv = algebra_.mode(u, t + i, v);
      if (uv.is_zero()) continue;
      out.add_scaled(algebra_.mode(uv, r + s - i, w), Rational(c));
    }
    return out;
  }

  /// sum_i (-1)^i C(t, i) { u(r+t-i)v(s+i)w - (-1)^t v(s+t-i)u(r+i)w }.
  /// For fixed t this is also the (r, s) coefficient of
  /// (x-y)^t [Y(u,x), Y(v,y)] w.
  State jacobi_rhs(const State& u, const State& v, const State& w, int r, int s, int t) const {
    const int last = truncation::last_index(t, {wt(v) + wt(w) - s, wt(u) + wt(w) - r});
    const Rational sign_t(t % 2 == 0 ? 1 : -1);
    State out;
    for (int i = 0; i <= last; ++i) {
      const Rational c = truncation::signed_binomial(t, i);
      if (c.is_zero()) continue;
      State term = algebra_.mode(u, r + t - i, algebra_.mode(v, s + i, w));
      term.add_scaled(algebra_.mode(v, s + t - i, algebra_.mode(u, r + i, w)), -sign_t);
      out.add_scaled(term, c);
    }
    return out;
  }

  DefectReport<State> jacobi(const State& u, const State& v, const State& w, int r, int s, int t) const {
    return report(jacobi_lhs(u, v, w, r, s, t) - jacobi_rhs(u, v, w, r, s, t), {{"r", r}, {"s", s}, {"t", t}},
                  "jacobi");
  }

  /// [u(r), v(s)]w - sum_i C(r, i) (u(i)v)(r+s-i)w
  DefectReport<State> commutator(const State& u, const State& v, const State& w, int r, int s) const {
    State defect = algebra_.mode(u, r, algebra_.mode(v, s, w));
    defect -= algebra_.mode(v, s, algebra_.mode(u, r, w));
    defect -= jacobi_lhs(u, v, w, r, s, 0);
    return report(std::move(defect), {{"r", r}, {"s", s}}, "commutator");
  }

  /// (u(t)v)(s)w - sum_i (-1)^i C(t, i) { u(t-i)v(s+i)w - (-1)^t v(s+t-i)u(i)w }
  DefectReport<State> associator(const State& u, const State& v, const State& w, int t, int s) const {
    State defect = algebra_.mode(algebra_.mode(u, t, v), s, w);
    defect -= jacobi_rhs(u, v, w, 0, s, t);
    return report(std::move(defect), {{"t", t}, {"s", s}}, "associator");
  }

  /// T(a)(n)w + n a(n-1)w with T(a) = a(-2)|0>.
  DefectReport<State> translation(const State& a, int n, const State& w) const {
    const State ta = algebra_.mode(a, -2, algebra_.vacuum());
    State defect = algebra_.mode(ta, n, w);
    defect.add_scaled(algebra_.mode(a, n - 1, w), Rational(n));
    return report(std::move(defect), {{"n", n}}, "translation");
  }

  /// Default (r, s) window half-width for locality profiles: the total
  /// weight of the inputs plus two.
  int default_locality_window(const State& u, const State& v, const State& w) const {
    return wt(u) + wt(v) + wt(w) + 2;
  }

  /// For t = t_min..t_max, the largest norm exponent of the (r, s) coefficient
  /// of (x-y)^t [Y(u,x), Y(v,y)] w over |r|, |s| <= window. Coefficients with
  /// r + s > wt(u)+wt(v)+wt(w) - t - 2 land in negative weight and are skipped.
  std::vector<LocalityPoint> locality_profile(const State& u, const State& v, const State& w, int t_max,
                                              int window, int t_min = 0) const {
    std::vector<LocalityPoint> out;
    const int total = wt(u) + wt(v) + wt(w);
    for (int t = t_min; t <= t_max; ++t) {
      NormExponent worst = NormExponent::neg_infinity();
      for (int r = -window; r <= window; ++r) {
        for (int s = -window; s <= window && r + s <= total - t - 2; ++s) {
          worst = max(worst, sup_norm_exponent(jacobi_rhs(u, v, w, r, s, t), prime_));
        }
      }
      out.push_back({t, worst});
    }
    return out;
  }

 private:
  static int wt(const State& s) { return s.max_weight().value_or(0); }

  DefectReport<State> report(State defect, Parameters params, std::string description) const {
    return make_report(std::move(defect), prime_, std::move(params), std::move(description));
  }

  A algebra_;
  long prime_;
};

// Heisenberg conveniences. `p` only affects the reported norm exponent.

DefectReport<HeisenbergState> jacobi_defect(const HeisenbergState& u, const HeisenbergState& v,
                                            const HeisenbergState& w, int r, int s, int t, long p);
DefectReport<HeisenbergState> commutator_defect(const HeisenbergState& u, const HeisenbergState& v,
                                                 const HeisenbergState& w, int r, int s, long p);
DefectReport<HeisenbergState> associator_defect(const HeisenbergState& u, const HeisenbergState& v,
                                                const HeisenbergState& w, int t, int s, long p);
/// residue_product_mode(a, b, t, n, w) - (a(t)b)(n)w
DefectReport<HeisenbergState> residue_product_defect(const HeisenbergState& a, const HeisenbergState& b,
                                                     const HeisenbergState& w, int t, int n, long p);
std::vector<LocalityPoint> locality_profile(const HeisenbergState& u, const HeisenbergState& v,
                                            const HeisenbergState& w, int t_max, long p);

struct IsometryProbe {
  NormExponent lhs;
  NormExponent rhs;
};

/// lhs = max over n in [n_lo, n_hi] and basis monomials b of grade
/// <= grade_bound of the norm exponent of a(n)b (basis monomials have norm
/// 1); rhs = sup-norm exponent of a. Throws on the zero state.
IsometryProbe isometry_probe(const HeisenbergState& a, long p, int grade_bound, int n_lo, int n_hi);

/// Outcome of an exhaustive sweep: how many defects were evaluated and how
/// many were nonzero. Each report is passed to `on_row` when provided.
struct SweepSummary {
  std::size_t checked = 0;
  std::size_t nonzero = 0;
};

using RowCallback = std::function<void(const DefectReport<HeisenbergState>&)>;

/// All basis triples of grade <= max_grade, (r, s, t) in [-window, window]^3.
SweepSummary jacobi_sweep(int max_grade, int window, long p, const RowCallback& on_row = {});
/// All basis triples of grade <= max_grade, (r, s) in [-window, window]^2.
SweepSummary commutator_sweep(int max_grade, int window, long p, const RowCallback& on_row = {});
/// All basis triples of grade <= max_grade, (t, s) in [-window, window]^2.
SweepSummary associator_sweep(int max_grade, int window, long p, const RowCallback& on_row = {});
/// Basis triples (a, b, w) of grade <= max_grade, (t, n) in [-window, window]^2.
SweepSummary residue_sweep(int max_grade, int window, long p, const RowCallback& on_row = {});
/// Basis pairs (a, w) of grade <= max_grade, n in [-window, window].
SweepSummary translation_sweep(int max_grade, int window, long p, const RowCallback& on_row = {});

}  // namespace padicvoa
