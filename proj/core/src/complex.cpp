#include "spreadkit/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace spreadkit {

Complex Complex::from_facets(const SetFamily& candidates) {
  if (candidates.empty()) throw std::invalid_argument("Complex: no facets given");
  std::vector<Face> maximal;
  for (Face f : candidates) {
    bool dominated = false;
    for (Face g : candidates) {
      if (f != g && f.subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  return Complex(SetFamily(candidates.ground_n(), std::move(maximal)));
}

Complex::Complex(SetFamily facets) : facets_(std::move(facets)) {
  rank_ = kMaxGroundSize + 1;
  for (Face f : facets_) {
    rank_ = std::min(rank_, f.size());
    max_facet_size_ = std::max(max_facet_size_, f.size());
  }
  if (facets_.empty()) rank_ = 0;
}

bool Complex::contains(Face f) const {
  for (Face facet : facets_)
    if (f.subset_of(facet)) return true;
  return false;
}

SetFamily Complex::layer(int k) const {
  if (k < 0) throw std::invalid_argument("layer: k must be >= 0");
  if (k > max_facet_size_) return SetFamily(ground_n());
  std::vector<Face> out;
  for (Face facet : facets_) {
    const auto elems = facet.elements();
    const int n = static_cast<int>(elems.size());
    if (k > n) continue;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      Face sub;
      for (int i : idx) sub = sub.with(elems[static_cast<std::size_t>(i)]);
      out.push_back(sub);
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    if (k == 0) break;  // single empty subset regardless of facet count
  }
  return SetFamily(ground_n(), std::move(out));
}

std::int64_t Complex::star_size(int k, Face t_set) const {
  if (t_set.size() > k) throw std::invalid_argument("star_size: |T| exceeds k");
  if (!t_set.fits_within(ground_n()))
    throw std::invalid_argument("star_size: T outside ground set");
  std::int64_t count = 0;
  for (Face f : layer(k))
    if (t_set.subset_of(f)) ++count;
  return count;
}

BestStar Complex::best_star(int k, int t) const {
  if (t > k) throw std::invalid_argument("best_star: t exceeds k");
  if (t > ground_n()) throw std::invalid_argument("best_star: t exceeds ground size");
  return family_best_star(layer(k), t);
}

}  // namespace spreadkit
