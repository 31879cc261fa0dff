#include "padicvoa/virasoro.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>

#include "padicvoa/combinatorics.hpp"
#include "padicvoa/fock.hpp"

namespace padicvoa {

namespace {

template <class Key>
class MemoTable {
 public:
  std::optional<VirasoroState> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(Key key, VirasoroState value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(std::move(key), std::move(value));
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, VirasoroState> table_;
};

}  // namespace

struct VirasoroVoa::Caches {
  MemoTable<std::pair<int, Partition>> bracket;
  MemoTable<std::tuple<Partition, int, Partition>> modes;
};

VirasoroVoa::VirasoroVoa(Rational quasicentral_charge)
    : cprime_(std::move(quasicentral_charge)), caches_(std::make_shared<Caches>()) {}

std::vector<Partition> VirasoroVoa::pbw_basis(int grade) { return partitions_of(grade, 2); }

std::vector<VirasoroState> VirasoroVoa::basis_states_up_to(int max_grade) {
  std::vector<State> out;
  for (int g = 0; g <= max_grade; ++g) {
    for (const auto& w : pbw_basis(g)) out.push_back(State::monomial(w));
  }
  return out;
}

VirasoroState VirasoroVoa::apply_L_word(int n, const Partition& word) const {
  if (word.empty()) {
    // L(n)v0 = 0 for n >= 0, and L(-1)v0 spans W_1.
    return n <= -2 ? State::monomial(Partition{-n}) : State{};
  }
  const int top = word.largest();
  if (-n >= top) return State::monomial(word.with_part(-n));
  if (n > word.weight()) return {};

  auto key = std::make_pair(n, word);
  if (auto hit = caches_->bracket.find(key)) return *std::move(hit);

  // L(n) L(-top) rest = L(-top) L(n) rest + (n + top) L(n - top) rest
  //                     + delta_{n,top} C(n+1, 3) c' rest
  const Partition rest = word.tail();
  State out = apply_L(-top, apply_L_word(n, rest));
  if (n + top != 0) out.add_scaled(apply_L_word(n - top, rest), Rational(n + top));
  if (n == top) out.add_term(rest, Rational(gen_binomial(n + 1, 3)) * cprime_);

  caches_->bracket.insert(std::move(key), out);
  return out;
}

VirasoroState VirasoroVoa::apply_L(int n, const State& s) const {
  State out;
  for (const auto& [word, c] : s.terms()) out.add_scaled(apply_L_word(n, word), c);
  return out;
}

VirasoroState VirasoroVoa::mode_on_words(const Partition& u, int n, const Partition& b) const {
  if (u.empty()) return n == -1 ? State::monomial(b) : State{};
  if (n >= u.weight() + b.weight()) return {};
  if (u.length() == 1 && u.largest() == 2) return apply_L_word(n - 1, b);

  auto key = std::make_tuple(u, n, b);
  if (auto hit = caches_->modes.find(key)) return *std::move(hit);

  // u = L(-k) rest = omega(t) rest with t = 1 - k; (-1)^i C(t, i) = C(k-2+i, i).
  const int k = u.largest();
  const Partition rest = u.tail();
  const int t = 1 - k;
  State out;
  for (int i = 0; n + i < rest.weight() + b.weight(); ++i) {
    if (rest.empty() && n + i != -1) continue;
    const State inner = mode_on_words(rest, n + i, b);
    if (inner.is_zero()) continue;
    out.add_scaled(apply_L(t - i - 1, inner), Rational(gen_binomial(k - 2 + i, i)));
  }
  // -(-1)^t rest(n+t-i) omega(i) b, with omega(i) = L(i-1) vanishing for i > wt(b) + 1.
  const Rational sign(k % 2 == 0 ? 1 : -1);
  for (int i = 0; i <= b.weight() + 1; ++i) {
    const State lb = apply_L_word(i - 1, b);
    if (lb.is_zero()) continue;
    const Rational weight = sign * Rational(gen_binomial(k - 2 + i, i));
    for (const auto& [word, c] : lb.terms()) out.add_scaled(mode_on_words(rest, n + t - i, word), weight * c);
  }

  caches_->modes.insert(std::move(key), out);
  return out;
}

VirasoroState VirasoroVoa::mode(const State& v, int n, const State& b) const {
  State out;
  for (const auto& [u, cu] : v.terms()) {
    for (const auto& [w, cw] : b.terms()) out.add_scaled(mode_on_words(u, n, w), cu * cw);
  }
  return out;
}

DefectReport<VirasoroState> vir_bracket_defect(const VirasoroVoa& voa, int m, int n, const VirasoroState& s, long p) {
  VirasoroState defect = voa.apply_L(m, voa.apply_L(n, s));
  defect -= voa.apply_L(n, voa.apply_L(m, s));
  defect.add_scaled(voa.apply_L(m + n, s), Rational(-(m - n)));
  if (m + n == 0) defect.add_scaled(s, -Rational(gen_binomial(m + 1, 3)) * voa.quasicentral_charge());
  return make_report(std::move(defect), p, {{"m", m}, {"n", n}}, "virasoro bracket");
}

std::string to_string(const VirasoroState& state) { return detail::render_terms(state.terms(), 'L'); }

}  // namespace padicvoa
