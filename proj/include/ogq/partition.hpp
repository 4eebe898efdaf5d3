#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ogq {

/// Strictly decreasing list of positive parts. The empty partition is valid
/// and indexes the fundamental class.
class StrictPartition {
 public:
  StrictPartition() = default;
  /// Throws DomainError unless the parts are strictly decreasing and >= 1.
  explicit StrictPartition(std::vector<int> parts);
  StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}

  /// "4321", "4,3,2,1", "2", or "0" (the empty partition). ParseError on
  /// anything else, including non-strict input.
  static StrictPartition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Digit form when every part is a single digit, comma form otherwise;
  /// "0" for the empty partition.
  std::string str() const;

  friend bool operator==(const StrictPartition& a, const StrictPartition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Canonical multiset order: ascending weight, then descending parts, so
/// 2 < 3 < 21 < 4 < 31 < ... < 4321.
bool canonical_less(const StrictPartition& a, const StrictPartition& b);
void canonical_sort(std::vector<StrictPartition>& classes);
std::string join_classes(const std::vector<StrictPartition>& classes, const std::string& sep = " ");

/// All strict partitions of `weight` with parts <= max_part, in decreasing
/// lexicographic order.
std::vector<StrictPartition> strict_partitions(int weight, int max_part);

/// All partitions of `weight` into odd parts, each as a non-increasing list.
std::vector<std::vector<int>> odd_partitions(int weight);

/// Parses a whitespace-separated class list, e.g. "2 42 4321".
std::vector<StrictPartition> parse_partition_list(std::string_view text);

}  // namespace ogq
