#include "padicvoa/modes.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "padicvoa/combinatorics.hpp"
#include "padicvoa/truncation.hpp"

namespace padicvoa {

namespace {

HeisenbergState h_mode_on_monomial(int m, const Partition& b) {
  if (m < 0) return HeisenbergState::monomial(b.with_part(-m));
  if (m == 0) return {};
  const int mult = b.multiplicity(m);
  if (mult == 0) return {};
  return HeisenbergState::monomial(*b.without_part(m), Rational(static_cast<long>(m) * mult));
}

struct ModeKey {
  Partition actor;
  int index;
  Partition target;
  friend bool operator==(const ModeKey&, const ModeKey&) = default;
};

struct ModeKeyHash {
  std::size_t operator()(const ModeKey& k) const noexcept {
    PartitionHash h;
    std::size_t seed = h(k.actor);
    seed ^= h(k.target) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    seed ^= static_cast<std::size_t>(k.index) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

class ModeCache {
 public:
  std::optional<HeisenbergState> find(const ModeKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(ModeKey key, HeisenbergState value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(std::move(key), std::move(value));
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<ModeKey, HeisenbergState, ModeKeyHash> table_;
};

ModeCache& mode_cache() {
  static ModeCache cache;
  return cache;
}

HeisenbergState monomial_mode(const Partition& u, int n, const Partition& b) {
  if (u.empty()) return n == -1 ? HeisenbergState::monomial(b) : HeisenbergState{};
  if (n >= u.weight() + b.weight()) return {};
  if (u.length() == 1 && u.largest() == 1) return h_mode_on_monomial(n, b);

  ModeKey key{u, n, b};
  if (auto hit = mode_cache().find(key)) return *std::move(hit);

  const int k = u.largest();
  const Partition rest = u.tail();
  HeisenbergState out;

  // h(-k-i) rest(n+i) b, stopping once rest(n+i)b vanishes by grading.
  for (int i = 0; n + i < rest.weight() + b.weight(); ++i) {
    if (rest.empty() && n + i != -1) continue;
    const HeisenbergState inner = monomial_mode(rest, n + i, b);
    if (inner.is_zero()) continue;
    out.add_scaled(h_mode(-k - i, inner), Rational(gen_binomial(k + i - 1, i)));
  }

  // -(-1)^k rest(n-k-i) h(i) b for 1 <= i <= wt(b); h(0) acts as zero.
  const Rational sign(k % 2 == 0 ? -1 : 1);
  for (int i = 1; i <= b.weight(); ++i) {
    const HeisenbergState hb = h_mode_on_monomial(i, b);
    if (hb.is_zero()) continue;
    const Rational weight = sign * Rational(gen_binomial(k + i - 1, i));
    for (const auto& [mono, c] : hb.terms()) {
      out.add_scaled(monomial_mode(rest, n - k - i, mono), weight * c);
    }
  }

  mode_cache().insert(std::move(key), out);
  return out;
}

}  // namespace

HeisenbergState h_mode(int m, const HeisenbergState& b) {
  HeisenbergState out;
  for (const auto& [mono, c] : b.terms()) out.add_scaled(h_mode_on_monomial(m, mono), c);
  return out;
}

HeisenbergState mode_action(const HeisenbergState& v, int n, const HeisenbergState& b) {
  HeisenbergState out;
  for (const auto& [u, cu] : v.terms()) {
    for (const auto& [w, cw] : b.terms()) {
      out.add_scaled(monomial_mode(u, n, w), cu * cw);
    }
  }
  return out;
}

HeisenbergState virasoro_mode(int n, const HeisenbergState& b) {
  const auto top = b.max_weight();
  if (!top) return {};
  const int wt = *top;
  HeisenbergState out;
  if (n == 0) {
    for (int j = 1; j <= wt; ++j) out += h_mode(-j, h_mode(j, b));
    return out;
  }
  // For n != 0 the two factors commute; apply the larger index first so the
  // annihilator acts on b.
  for (int j = n - wt; j <= wt; ++j) {
    const int other = n - j;
    if (j == 0 || other == 0) continue;
    const int right = std::max(j, other);
    const int left = std::min(j, other);
    out += h_mode(left, h_mode(right, b));
  }
  out *= Rational(Integer(1), Integer(2));
  return out;
}

ZeroMode::ZeroMode(const HeisenbergState& v) : components_(v.homogeneous_components()) {}

HeisenbergState ZeroMode::operator()(const HeisenbergState& b) const {
  HeisenbergState out;
  for (const auto& [weight, component] : components_) out += mode_action(component, weight - 1, b);
  return out;
}

HeisenbergState residue_product_mode(const HeisenbergState& a, const HeisenbergState& b, int t, int n,
                                     const HeisenbergState& w) {
  const int wa = a.max_weight().value_or(0);
  const int wb = b.max_weight().value_or(0);
  const int ww = w.max_weight().value_or(0);
  const int last = truncation::last_index(t, {wb + ww - n, wa + ww});
  const Rational sign_t(t % 2 == 0 ? 1 : -1);
  HeisenbergState out;
  for (int i = 0; i <= last; ++i) {
    const Rational coeff = truncation::signed_binomial(t, i);
    if (coeff.is_zero()) continue;
    HeisenbergState term = mode_action(a, t - i, mode_action(b, n + i, w));
    term.add_scaled(mode_action(b, t + n - i, mode_action(a, i, w)), -sign_t);
    out.add_scaled(term, coeff);
  }
  return out;
}

HeisenbergState translation(const HeisenbergState& a) { return mode_action(a, -2, HeisenbergState::vacuum()); }

void clear_mode_cache() { mode_cache().clear(); }
std::size_t mode_cache_size() { return mode_cache().size(); }

}  // namespace padicvoa
