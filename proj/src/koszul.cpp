#include "quadop/koszul.hpp"

#include "quadop/errors.hpp"

namespace quadop {

std::string dual_name(const std::string& name) {
  if (!name.empty() && name.back() == '\'') return name.substr(0, name.size() - 1);
  return name + "'";
}

GeneratorSpace dual_generators(const GeneratorSpace& v) {
  std::vector<std::string> names;
  for (const auto& n : v.names()) names.push_back(dual_name(n));
  return GeneratorSpace(std::move(names), -v.swap().transpose());
}

bool DualPairing::is_equivariant() const {
  for (const auto& pi : all_perms()) {
    const MatrixQ lhs = free3_action(dual, pi).transpose() * matrix * free3_action(primal, pi);
    if (!(lhs == matrix * Rational(pi.sign()))) return false;
  }
  return true;
}

DualPairing pairing_matrix(const GeneratorSpace& v) {
  DualPairing p{v, dual_generators(v), MatrixQ::identity(free3_dim(v.dim()))};
  if (!p.is_equivariant())
    throw InvariantError("pairing between F_V(3) and F_{V^}(3) is not sign-equivariant");
  return p;
}

namespace {

std::string dual_operad_name(const std::string& name) {
  if (!name.empty() && name.back() == '!') return name.substr(0, name.size() - 1);
  return name + "!";
}

}  // namespace

QuadOperad dual_operad(const QuadOperad& p) {
  // With mutually dual bases, R⊥ is the kernel of the matrix whose rows span R.
  SubspaceQ perp = annihilator(p.relations);
  GeneratorSpace dual_gens = dual_generators(p.gens);
  if (perp.dim() + p.relations.dim() != p.free3())
    throw InvariantError(p.name + ": dim R + dim R^perp != 3d^2");
  QuadOperad out = operad_from_relations(dual_operad_name(p.name), dual_gens, std::move(perp),
                                         "dual(" + p.name + ")");
  for (const auto& [key, value] : p.dictionary) out.dictionary[dual_name(key)] = dual_name(value);
  return out;
}

JacobiCheck verify_jacobi_duality(const QuadOperad& p, const QuadOperad& candidate_dual) {
  JacobiCheck out;
  const std::size_t d = p.d();
  if (candidate_dual.d() != d) {
    out.pass = false;
    out.failure = "generator counts differ";
    return out;
  }
  // Degree 2: the canonical element Σ e_i^∨ ⊗ e_i must be odd under the diagonal (12).
  const MatrixQ skew = candidate_dual.gens.swap() * p.gens.swap().transpose();
  if (!(skew == -MatrixQ::identity(d))) {
    out.pass = false;
    out.failure = "bracket is not skew-symmetric: dual swap is not -(swap)^T";
    out.witness = skew + MatrixQ::identity(d);
    return out;
  }
  // Degree 3: the Jacobiator on (y1⊗x1, y2⊗x2, y3⊗x3) is Σ over all basis monomials μ of
  // μ^∨ ⊗ μ (each cyclic term contributes one coset block); it must vanish in D(3) ⊗ P(3).
  const MatrixQ dual_proj = p3_projection(candidate_dual).matrix;
  const MatrixQ primal_proj = p3_projection(p).matrix;
  MatrixQ jacobiator = dual_proj * primal_proj.transpose();
  if (!jacobiator.is_zero()) {
    out.pass = false;
    out.failure = "Jacobi identity fails in degree 3";
    out.witness = std::move(jacobiator);
  }
  return out;
}

}  // namespace quadop
