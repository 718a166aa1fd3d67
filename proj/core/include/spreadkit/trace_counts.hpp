#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "spreadkit/set_family.hpp"

namespace spreadkit {

/// Counts |A(M)| = |{F in A : M subset of F}| for every M contained in some
/// member. Dense subset-sum table for small ground sets, hashed submask
/// enumeration otherwise (bounded by sum over members of 2^|F|).
class TraceCounts {
 public:
  explicit TraceCounts(const SetFamily& fam, std::size_t entry_budget = std::size_t{1} << 27);

  std::int64_t total() const { return total_; }
  std::int64_t count(std::uint64_t mask) const;
  /// Masks with positive count, ascending; includes the empty mask.
  const std::vector<std::uint64_t>& masks() const { return masks_; }
  int max_mask_size() const { return max_mask_size_; }

 private:
  std::int64_t total_ = 0;
  int max_mask_size_ = 0;
  bool dense_ = false;
  std::vector<std::int64_t> table_;  // dense
  std::unordered_map<std::uint64_t, std::int64_t> map_;  // sparse
  std::vector<std::uint64_t> masks_;
};

}  // namespace spreadkit
