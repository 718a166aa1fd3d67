#pragma once

#include "spreadkit/derived.hpp"
#include "spreadkit/set_family.hpp"

namespace spreadkit {

/// Simplicial complex stored by its facet antichain. The void complex is
/// excluded; the complex {empty set} is a single empty facet.
class Complex {
 public:
  /// Canonicalizes: drops candidates contained in other candidates.
  static Complex from_facets(const SetFamily& candidates);

  int ground_n() const { return facets_.ground_n(); }
  const SetFamily& facets() const { return facets_; }

  /// Minimum facet size: the largest n for which every maximal set has size >= n.
  int rank() const { return rank_; }
  int max_facet_size() const { return max_facet_size_; }

  /// Down-closure membership: F is a face iff it lies inside some facet.
  bool contains(Face f) const;

  /// All k-element faces, deduplicated, canonical order. Empty (not an error)
  /// when k exceeds the maximum facet size.
  SetFamily layer(int k) const;

  /// |C^(k)[T]|: number of k-faces containing T. Requires |T| <= k.
  std::int64_t star_size(int k, Face t_set) const;

  /// t-set maximizing star_size in layer k, ties by smallest integer encoding.
  BestStar best_star(int k, int t) const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.facets_ == b.facets_; }

 private:
  explicit Complex(SetFamily facets);

  SetFamily facets_;
  int rank_ = 0;
  int max_facet_size_ = 0;
};

}  // namespace spreadkit
