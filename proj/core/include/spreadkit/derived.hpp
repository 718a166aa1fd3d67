#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spreadkit/set_family.hpp"

namespace spreadkit {

enum class DerivedKind { trace, avoid, superset, superset_union, section };

/// A(B) = { F \ B : F in A, B subset of F }. Ground set is preserved.
SetFamily trace(const SetFamily& fam, Face b);

/// A(B-bar) = { F in A : F disjoint from B }.
SetFamily avoiding(const SetFamily& fam, Face b);

/// A[B] = { F in A : B subset of F }.
SetFamily superset(const SetFamily& fam, Face b);

/// A[S] = union over B in S of A[B].
SetFamily superset_union(const SetFamily& fam, const std::vector<Face>& covers);

/// A(X,Y) = { F \ X : F in A, F intersect Y == X }. Requires X subset of Y.
SetFamily section(const SetFamily& fam, Face x, Face y);

/// Generic dispatcher. trace/avoid/superset take one arg, section takes (X, Y),
/// superset_union takes the whole arg list as the cover family.
SetFamily derived_family(const SetFamily& fam, DerivedKind kind, const std::vector<Face>& args);

struct IntersectionCheck {
  bool holds = true;
  std::optional<std::pair<Face, Face>> witness;
};

/// Every unordered pair of members (not necessarily distinct) meets in >= t
/// elements. A member with fewer than t elements fails against itself.
IntersectionCheck is_t_intersecting(const SetFamily& fam, int t);

/// Intersection of all members; invalid on the empty family.
Face common_core(const SetFamily& fam);

struct BestStar {
  Face t_set;
  std::int64_t size = 0;
};

/// T of size t maximizing |A[T]|, ties broken by smallest integer encoding.
BestStar family_best_star(const SetFamily& fam, int t);

}  // namespace spreadkit
