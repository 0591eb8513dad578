#pragma once

#include <array>
#include <string>
#include <utility>

namespace quadop {

/// Permutation of {1,2,3} stored by its images (π(1), π(2), π(3)).
struct PermS3 {
  std::array<int, 3> images{1, 2, 3};

  static PermS3 identity() { return {}; }
  static PermS3 cycle123() { return {{2, 3, 1}}; }
  static PermS3 cycle132() { return {{3, 1, 2}}; }
  static PermS3 swap12() { return {{2, 1, 3}}; }
  static PermS3 swap13() { return {{3, 2, 1}}; }
  static PermS3 swap23() { return {{1, 3, 2}}; }

  int operator()(int t) const { return images[t - 1]; }
  /// (this ∘ rhs)(t) = this(rhs(t)); rhs is applied first.
  PermS3 operator*(const PermS3& rhs) const;
  PermS3 inverse() const;
  int sign() const;
  bool is_valid() const;
  bool operator==(const PermS3&) const = default;

  /// Cycle notation such as "id", "(12)", "(123)".
  std::string to_string() const;
};

/// All six elements in a fixed order: id, (12), (13), (23), (123), (132).
const std::array<PermS3, 6>& all_perms();

/// Left coset representatives of S₂ = ⟨(12)⟩ in S₃, in basis order id, (123), (132).
const std::array<PermS3, 3>& coset_reps();

/// Index (0..2) of a coset representative; -1 if π is not one.
int coset_index(const PermS3& pi);

/// π = rep ∘ tail with rep ∈ coset_reps() and tail ∈ {id, (12)}.
std::pair<PermS3, PermS3> coset_decompose(const PermS3& pi);

}  // namespace quadop
