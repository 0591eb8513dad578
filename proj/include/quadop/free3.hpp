#pragma once

// The S₂-module V of binary generators and the free degree-3 space
// F_V(3) = kS₃ ⊗_{kS₂} (V ⊗→ V) with its left S₃ action.
//
// Basis of F_V(3): triples (σ, outer, inner), σ ∈ {id, (123), (132)}.
// (σ, i, j) is the monomial (x_{σ(1)} ∘_j x_{σ(2)}) ∘_i x_{σ(3)}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quadop/linalg.hpp"
#include "quadop/perm.hpp"

namespace quadop {

/// Basis names plus the matrix of (12): column j holds the coordinates of (12)·e_j.
class GeneratorSpace {
 public:
  GeneratorSpace() = default;
  /// Throws InputError on duplicate names, shape mismatch, or swap² ≠ 1.
  GeneratorSpace(std::vector<std::string> names, MatrixQ swap);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const MatrixQ& swap() const { return swap_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const GeneratorSpace&) const = default;

 private:
  std::vector<std::string> names_;
  MatrixQ swap_;
};

enum class Symmetry { Symmetric, Antisymmetric };

/// Builder for the common shapes: a symmetric or antisymmetric generator, or a pair (g, (12)g).
class GeneratorSpaceBuilder {
 public:
  GeneratorSpaceBuilder& add(const std::string& name, Symmetry s);
  GeneratorSpaceBuilder& add_pair(const std::string& name, const std::string& opposite);
  GeneratorSpace build() const;

 private:
  struct Entry {
    std::string name;
    int kind;  // 0 sym, 1 antisym, 2 pair-first, 3 pair-second
  };
  std::vector<Entry> entries_;
};

struct Free3Index {
  int coset;  // 0: id, 1: (123), 2: (132)
  std::size_t outer;
  std::size_t inner;
};

inline std::size_t free3_dim(std::size_t d) { return 3 * d * d; }
inline std::size_t free3_index(int coset, std::size_t outer, std::size_t inner, std::size_t d) {
  return (static_cast<std::size_t>(coset) * d + outer) * d + inner;
}
inline Free3Index free3_decode(std::size_t idx, std::size_t d) {
  return {static_cast<int>(idx / (d * d)), (idx / d) % d, idx % d};
}

/// Matrix of the left action of π on F_V(3) (columns are images of basis vectors).
MatrixQ free3_action(const GeneratorSpace& v, const PermS3& pi);

/// Action matrices for all_perms() order.
std::vector<MatrixQ> free3_actions(const GeneratorSpace& v);

/// Smallest S₃-stable subspace containing the given vectors.
SubspaceQ s3_closure(const GeneratorSpace& v, const std::vector<VectorQ>& vectors);

/// Largest S₃-stable subspace contained in w.
SubspaceQ s3_core(const GeneratorSpace& v, const SubspaceQ& w);

bool is_s3_stable(const GeneratorSpace& v, const SubspaceQ& w);

/// Linear map F_V(3) → F_V(3) induced by a change of generator basis T (T ⊗ T on every coset block).
MatrixQ free3_induced(const MatrixQ& t);

}  // namespace quadop
