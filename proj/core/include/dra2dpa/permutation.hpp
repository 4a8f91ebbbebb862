#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dra2dpa {

/// Bijective ordering of the pair indices 0..k-1; the appearance record.
/// The empty permutation (k = 0) is allowed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> order);

  static Permutation identity(std::uint32_t k);

  std::uint32_t size() const { return static_cast<std::uint32_t>(order_.size()); }
  bool empty() const { return order_.empty(); }

  /// Pair index stored at a position.
  std::uint32_t at(std::uint32_t position) const { return order_[position]; }
  /// Position of a pair index.
  std::uint32_t position_of(std::uint32_t index) const;

  const std::vector<std::uint32_t>& order() const { return order_; }

  /// "312" style rendering with 1-based indices; multi-digit indices are
  /// separated by dots.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> order_;
};

/// Stable move-to-front: the pair indices in `visited_mask` (bit i = index i)
/// are moved to the front, keeping their relative order by previous position;
/// the remaining indices follow in their previous relative order.  Throws
/// std::out_of_range when the mask refers to an index >= k.
Permutation move_to_front(const Permutation& pi, std::uint64_t visited_mask);

/// All permutations of 0..k-1 in lexicographic order; guards against k > 8.
std::vector<Permutation> all_permutations(std::uint32_t k);

}  // namespace dra2dpa
