#pragma once

#include <cstdint>
#include <vector>

#include "spreadkit/face.hpp"

namespace spreadkit {

/// Duplicate-free family of Faces over a fixed ground set [N].
/// Members are kept in canonical order (ascending as integers), so family
/// equality is plain list equality. Immutable value type.
class SetFamily {
 public:
  SetFamily() = default;

  explicit SetFamily(int ground_n);
  SetFamily(int ground_n, std::vector<Face> members);

  int ground_n() const { return ground_n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Face>& members() const { return members_; }
  Face member(std::size_t i) const { return members_[i]; }

  bool contains(Face f) const;
  bool subfamily_of(const SetFamily& other) const;

  /// Members present in this family but not in `other`.
  SetFamily minus(const SetFamily& other) const;
  /// Union of two families over the same ground set.
  SetFamily unite(const SetFamily& other) const;

  /// Largest member size; 0 for the empty family.
  int max_member_size() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_n_ == b.ground_n_ && a.members_ == b.members_;
  }

 private:
  int ground_n_ = 0;
  std::vector<Face> members_;
};

}  // namespace spreadkit
