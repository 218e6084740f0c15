#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cobord {

/// Integer partition with parts in non-increasing order.
class Partition {
 public:
  Partition() = default;
  /// Parts in any order; they are sorted on construction. Parts must be positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  std::size_t length() const { return parts_.size(); }

  /// Key such as "p1^2*p3": factors by increasing index, exponents for repeats.
  std::string key() const;
  static Partition from_key(std::string_view key);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, ordered as p1^n first and pn last
/// (so weight 3 gives p1^3, p1*p2, p3).
std::vector<Partition> partitions_of(int n);

}  // namespace cobord
