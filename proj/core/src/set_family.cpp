#include "spreadkit/set_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace spreadkit {

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGroundSize)
    throw std::invalid_argument("SetFamily: ground size out of [0,64]");
}

}  // namespace

SetFamily::SetFamily(int ground_n) : ground_n_(ground_n) { check_ground(ground_n); }

SetFamily::SetFamily(int ground_n, std::vector<Face> members)
    : ground_n_(ground_n), members_(std::move(members)) {
  check_ground(ground_n);
  const Face u = Face::universe(ground_n);
  for (Face f : members_) {
    if (!f.subset_of(u))
      throw std::invalid_argument("SetFamily: member " + f.str() + " outside ground set [" +
                                  std::to_string(ground_n) + "]");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(Face f) const {
  return std::binary_search(members_.begin(), members_.end(), f);
}

bool SetFamily::subfamily_of(const SetFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

SetFamily SetFamily::minus(const SetFamily& other) const {
  std::vector<Face> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return SetFamily(ground_n_, std::move(out));
}

SetFamily SetFamily::unite(const SetFamily& other) const {
  if (other.ground_n_ != ground_n_)
    throw std::invalid_argument("SetFamily::unite: ground size mismatch");
  std::vector<Face> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  return SetFamily(ground_n_, std::move(out));
}

int SetFamily::max_member_size() const {
  int best = 0;
  for (Face f : members_) best = std::max(best, f.size());
  return best;
}

}  // namespace spreadkit
