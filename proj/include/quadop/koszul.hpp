#pragma once

// Koszul duality for binary quadratic operads.
//
// Convention: F_{V∨}(3) and F_V(3) are paired by declaring the two monomial
// bases mutually dual. All signs live in the dual generators' swap matrix,
// which is −Aᵀ for a swap matrix A. With the coset representatives being even
// permutations this makes the pairing S₃-equivariant up to the sign character.

#include <optional>
#include <string>

#include "quadop/operad.hpp"

namespace quadop {

/// "g" -> "g'" and "g'" -> "g".
std::string dual_name(const std::string& name);

/// V∨ ≅ k₋ ⊗ V*: primed names and swap −Aᵀ.
GeneratorSpace dual_generators(const GeneratorSpace& v);

struct DualPairing {
  GeneratorSpace primal;
  GeneratorSpace dual;
  MatrixQ matrix;  // rows: F_{V∨}(3) basis, columns: F_V(3) basis

  /// True iff M_dual(π)ᵀ · matrix · M_primal(π) = sgn(π) · matrix for every π ∈ S₃.
  bool is_equivariant() const;
};

/// Throws InvariantError if the equivariance check fails.
DualPairing pairing_matrix(const GeneratorSpace& v);

/// P! = P(V∨, R⊥).
QuadOperad dual_operad(const QuadOperad& p);

struct JacobiCheck {
  bool pass = true;
  std::string failure;  // empty on success
  /// Nonzero projection of the Jacobiator in D(3) ⊗ P(3) (rows index D(3)) on failure.
  std::optional<MatrixQ> witness;
};

/// Checks that the bracket [a⊗x, b⊗y] = Σᵢ (a ∘ⁱ b) ⊗ (x ∘ᵢ y) on D ⊗ P is skew-symmetric and
/// satisfies the Jacobi identity in degree 3, for `candidate_dual` generated by V∨.
JacobiCheck verify_jacobi_duality(const QuadOperad& p, const QuadOperad& candidate_dual);

}  // namespace quadop
