#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace kmk {

// Integer partition as a weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // 0-based row; 0 beyond the last part.
  int part(int row) const { return row < length() ? parts_[static_cast<std::size_t>(row)] : 0; }

  // Member of Λ_k: π_i <= k - i for 1-based i.
  bool in_staircase(int k) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace kmk
