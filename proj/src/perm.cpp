#include "quadop/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadop {

PermS3 PermS3::operator*(const PermS3& rhs) const {
  PermS3 out;
  for (int t = 1; t <= 3; ++t) out.images[t - 1] = (*this)(rhs(t));
  return out;
}

PermS3 PermS3::inverse() const {
  PermS3 out;
  for (int t = 1; t <= 3; ++t) out.images[images[t - 1] - 1] = t;
  return out;
}

int PermS3::sign() const {
  int inversions = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (images[a] > images[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool PermS3::is_valid() const {
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  return sorted == std::array<int, 3>{1, 2, 3};
}

std::string PermS3::to_string() const {
  if (*this == identity()) return "id";
  if (*this == cycle123()) return "(123)";
  if (*this == cycle132()) return "(132)";
  if (*this == swap12()) return "(12)";
  if (*this == swap13()) return "(13)";
  if (*this == swap23()) return "(23)";
  return "invalid";
}

const std::array<PermS3, 6>& all_perms() {
  static const std::array<PermS3, 6> perms{PermS3::identity(), PermS3::swap12(),
                                           PermS3::swap13(),   PermS3::swap23(),
                                           PermS3::cycle123(), PermS3::cycle132()};
  return perms;
}

const std::array<PermS3, 3>& coset_reps() {
  static const std::array<PermS3, 3> reps{PermS3::identity(), PermS3::cycle123(),
                                          PermS3::cycle132()};
  return reps;
}

int coset_index(const PermS3& pi) {
  const auto& reps = coset_reps();
  for (int k = 0; k < 3; ++k)
    if (reps[k] == pi) return k;
  return -1;
}

std::pair<PermS3, PermS3> coset_decompose(const PermS3& pi) {
  if (!pi.is_valid()) throw std::invalid_argument("coset_decompose: not a permutation");
  // The coset π·S₂ is determined by π(3); each representative sends 3 somewhere different.
  for (const auto& rep : coset_reps()) {
    if (rep(3) != pi(3)) continue;
    PermS3 tail = rep.inverse() * pi;
    return {rep, tail};
  }
  throw std::logic_error("coset_decompose: unreachable");
}

}  // namespace quadop
