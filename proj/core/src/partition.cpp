#include "padicvoa/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace padicvoa {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::with_part(int part) const {
  if (part <= 0) throw std::invalid_argument("partition parts must be positive");
  Partition out;
  out.parts_.reserve(parts_.size() + 1);
  auto pos = std::find_if(parts_.begin(), parts_.end(), [part](int x) { return x < part; });
  out.parts_.insert(out.parts_.end(), parts_.begin(), pos);
  out.parts_.push_back(part);
  out.parts_.insert(out.parts_.end(), pos, parts_.end());
  out.weight_ = weight_ + part;
  return out;
}

std::optional<Partition> Partition::without_part(int part) const {
  auto pos = std::find(parts_.begin(), parts_.end(), part);
  if (pos == parts_.end()) return std::nullopt;
  Partition out;
  out.parts_.reserve(parts_.size() - 1);
  out.parts_.insert(out.parts_.end(), parts_.begin(), pos);
  out.parts_.insert(out.parts_.end(), std::next(pos), parts_.end());
  out.weight_ = weight_ - part;
  return out;
}

Partition Partition::tail() const {
  if (parts_.empty()) throw std::logic_error("tail of the empty partition");
  Partition out;
  out.parts_.assign(std::next(parts_.begin()), parts_.end());
  out.weight_ = weight_ - parts_.front();
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void extend(int remaining, int max_part, int min_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  // Ascending choice of the next part gives lexicographic order overall.
  for (int part = min_part; part <= std::min(remaining, max_part); ++part) {
    const int rest = remaining - part;
    if (rest != 0 && rest < min_part) continue;
    prefix.push_back(part);
    extend(rest, part, min_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int min_part) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  if (min_part < 1) throw std::invalid_argument("partitions_of: min_part must be >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(n, n, min_part, prefix, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, 1); }

}  // namespace padicvoa
