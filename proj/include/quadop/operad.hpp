#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadop/free3.hpp"

namespace quadop {

/// Binary quadratic operad P(V, R): generators V and an S₃-stable relation space R ⊆ F_V(3).
struct QuadOperad {
  std::string name;
  GeneratorSpace gens;
  SubspaceQ relations;
  /// Empty for operads read from identities; otherwise the construction, e.g. "white(Perm,Lie)".
  std::string recipe;
  /// Optional display names for generators (e.g. "m*m" -> "⊢"), used only in reports.
  std::map<std::string, std::string> dictionary;

  std::size_t d() const { return gens.dim(); }
  std::size_t free3() const { return free3_dim(gens.dim()); }
  std::size_t p3_dim() const { return free3() - relations.dim(); }
};

struct OperadDims {
  std::size_t gen = 0;
  std::size_t free3 = 0;
  std::size_t relations = 0;
  std::size_t p3 = 0;
  std::size_t dual_relations = 0;
  std::size_t dual_p3 = 0;

  bool operator==(const OperadDims&) const = default;
};

/// dim R⊥ = dim P(3) and dim P!(3) = dim R.
OperadDims dims_of(const QuadOperad& p);

/// Parses the identities, closes them under S₃ and validates the result.
QuadOperad make_operad(const std::string& name, const GeneratorSpace& gens,
                       const std::vector<std::string>& relation_texts);

/// Wraps an already computed relation space; throws InvariantError unless it is S₃-stable.
QuadOperad operad_from_relations(const std::string& name, const GeneratorSpace& gens,
                                 SubspaceQ relations, std::string recipe = {});

/// Quotient coordinates of P(3) = F_V(3)/R: the free (non-pivot) basis monomials of R
/// are the representatives, and `matrix` maps F_V(3) onto them with kernel exactly R.
struct P3Projection {
  std::vector<std::size_t> representatives;
  MatrixQ matrix;  // p3_dim × free3

  VectorQ project(std::span<const Rational> v) const { return matrix * v; }
};

P3Projection p3_projection(const QuadOperad& p);

/// Transports R along the generator automorphism T (T ⊗ T on each coset block).
/// T must be invertible and commute with the swap; throws InputError otherwise.
QuadOperad change_basis(const QuadOperad& p, const MatrixQ& t);

}  // namespace quadop
