#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace spreadkit {

inline constexpr int kMaxGroundSize = 64;

/// Subset of a ground set [N], N <= 64. Element i (1-based) lives at bit i-1.
/// Faces are immutable values; all operations return new Faces.
class Face {
 public:
  constexpr Face() = default;

  static constexpr Face from_mask(std::uint64_t mask) { return Face(mask); }

  static Face of(std::initializer_list<int> elements) {
    Face f;
    for (int e : elements) f = f.with(e);
    return f;
  }

  static Face from_elements(const std::vector<int>& elements) {
    Face f;
    for (int e : elements) f = f.with(e);
    return f;
  }

  /// The full set {1,..,n}.
  static Face universe(int n) {
    if (n < 0 || n > kMaxGroundSize)
      throw std::invalid_argument("Face::universe: ground size out of [0,64]");
    if (n == kMaxGroundSize) return Face(~std::uint64_t{0});
    return Face((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  bool contains(int element) const { return (bits_ >> bit_index(element)) & 1u; }

  constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }
  int intersection_size(Face other) const { return std::popcount(bits_ & other.bits_); }

  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  /// Set difference (this minus o).
  constexpr Face minus(Face o) const { return Face(bits_ & ~o.bits_); }

  Face with(int element) const { return Face(bits_ | (std::uint64_t{1} << bit_index(element))); }
  Face without(int element) const { return Face(bits_ & ~(std::uint64_t{1} << bit_index(element))); }

  bool fits_within(int ground_n) const { return subset_of(universe(ground_n)); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    std::uint64_t m = bits_;
    while (m) {
      out.push_back(std::countr_zero(m) + 1);
      m &= m - 1;
    }
    return out;
  }

  /// Smallest element, 0 when empty.
  int min_element() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    s += "}";
    return s;
  }

  friend constexpr auto operator<=>(Face a, Face b) { return a.bits_ <=> b.bits_; }
  friend constexpr bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }

 private:
  constexpr explicit Face(std::uint64_t m) : bits_(m) {}

  static int bit_index(int element) {
    if (element < 1 || element > kMaxGroundSize)
      throw std::invalid_argument("Face: element out of [1,64]");
    return element - 1;
  }

  std::uint64_t bits_ = 0;
};

}  // namespace spreadkit
