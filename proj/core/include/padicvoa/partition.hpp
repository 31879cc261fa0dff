#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace padicvoa {

/// A weakly decreasing list of positive integers. Indexes the monomial
/// h(-n1)...h(-nk)|0> of the Heisenberg Fock space, and the PBW word
/// L(-n1)...L(-nk)v0 of the Virasoro module.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws std::invalid_argument on a nonpositive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t length() const { return parts_.size(); }
  int weight() const { return weight_; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int part) const;

  Partition with_part(int part) const;
  /// Removes one copy of `part`, or nullopt when absent.
  std::optional<Partition> without_part(int part) const;
  /// Drops the largest part; throws on the empty partition.
  Partition tail() const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n, in lexicographic order of their part lists.
std::vector<Partition> partitions_of(int n);
/// All partitions of n whose parts are >= min_part.
std::vector<Partition> partitions_of(int n, int min_part);

}  // namespace padicvoa
