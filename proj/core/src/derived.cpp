#include "spreadkit/derived.hpp"

#include <stdexcept>
#include <unordered_map>

namespace spreadkit {

namespace {

void check_arg(const SetFamily& fam, Face b, const char* op) {
  if (!b.fits_within(fam.ground_n()))
    throw std::invalid_argument(std::string(op) + ": argument " + b.str() +
                                " outside ground set [" + std::to_string(fam.ground_n()) + "]");
}

}  // namespace

SetFamily trace(const SetFamily& fam, Face b) {
  check_arg(fam, b, "trace");
  std::vector<Face> out;
  for (Face f : fam)
    if (b.subset_of(f)) out.push_back(f.minus(b));
  return SetFamily(fam.ground_n(), std::move(out));
}

SetFamily avoiding(const SetFamily& fam, Face b) {
  check_arg(fam, b, "avoiding");
  std::vector<Face> out;
  for (Face f : fam)
    if (!f.intersects(b)) out.push_back(f);
  return SetFamily(fam.ground_n(), std::move(out));
}

SetFamily superset(const SetFamily& fam, Face b) {
  check_arg(fam, b, "superset");
  std::vector<Face> out;
  for (Face f : fam)
    if (b.subset_of(f)) out.push_back(f);
  return SetFamily(fam.ground_n(), std::move(out));
}

SetFamily superset_union(const SetFamily& fam, const std::vector<Face>& covers) {
  std::vector<Face> out;
  for (Face f : fam) {
    for (Face b : covers) {
      check_arg(fam, b, "superset_union");
      if (b.subset_of(f)) {
        out.push_back(f);
        break;
      }
    }
  }
  return SetFamily(fam.ground_n(), std::move(out));
}

SetFamily section(const SetFamily& fam, Face x, Face y) {
  check_arg(fam, x, "section");
  check_arg(fam, y, "section");
  if (!x.subset_of(y)) throw std::invalid_argument("section: X must be a subset of Y");
  std::vector<Face> out;
  for (Face f : fam)
    if ((f & y) == x) out.push_back(f.minus(x));
  return SetFamily(fam.ground_n(), std::move(out));
}

SetFamily derived_family(const SetFamily& fam, DerivedKind kind, const std::vector<Face>& args) {
  switch (kind) {
    case DerivedKind::trace:
      if (args.size() != 1) throw std::invalid_argument("trace takes one argument");
      return trace(fam, args[0]);
    case DerivedKind::avoid:
      if (args.size() != 1) throw std::invalid_argument("avoid takes one argument");
      return avoiding(fam, args[0]);
    case DerivedKind::superset:
      if (args.size() != 1) throw std::invalid_argument("superset takes one argument");
      return superset(fam, args[0]);
    case DerivedKind::superset_union:
      return superset_union(fam, args);
    case DerivedKind::section:
      if (args.size() != 2) throw std::invalid_argument("section takes two arguments");
      return section(fam, args[0], args[1]);
  }
  throw std::invalid_argument("derived_family: unknown kind");
}

IntersectionCheck is_t_intersecting(const SetFamily& fam, int t) {
  if (t < 1) throw std::invalid_argument("is_t_intersecting: t must be >= 1");
  // Pairs are not required distinct: a member smaller than t violates (F, F).
  for (Face f : fam) {
    if (f.size() < t) return {false, std::make_pair(f, f)};
  }
  const auto& m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i].intersection_size(m[j]) < t) return {false, std::make_pair(m[i], m[j])};
    }
  }
  return {true, std::nullopt};
}

Face common_core(const SetFamily& fam) {
  if (fam.empty()) throw std::invalid_argument("common_core: empty family");
  Face core = Face::universe(fam.ground_n());
  for (Face f : fam) core = core & f;
  return core;
}

BestStar family_best_star(const SetFamily& fam, int t) {
  if (t < 0 || t > fam.ground_n())
    throw std::invalid_argument("family_best_star: t out of [0, ground_n]");
  if (t == 0) return {Face{}, static_cast<std::int64_t>(fam.size())};

  std::unordered_map<std::uint64_t, std::int64_t> star_count;
  for (Face f : fam) {
    if (f.size() < t) continue;
    // Walk all t-subsets of f via an index combination over its elements.
    const auto elems = f.elements();
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int n = static_cast<int>(elems.size());
    while (true) {
      Face sub;
      for (int i : idx) sub = sub.with(elems[static_cast<std::size_t>(i)]);
      ++star_count[sub.mask()];
      int pos = t - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - t + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < t; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }

  if (star_count.empty()) {
    // Nothing to hit: report the canonical first t-set with a zero star.
    Face first;
    for (int e = 1; e <= t; ++e) first = first.with(e);
    return {first, 0};
  }
  std::uint64_t best_mask = 0;
  std::int64_t best = -1;
  for (const auto& [mask, cnt] : star_count) {
    if (cnt > best || (cnt == best && mask < best_mask)) {
      best = cnt;
      best_mask = mask;
    }
  }
  return {Face::from_mask(best_mask), best};
}

}  // namespace spreadkit
