#include "quadop/operad.hpp"

#include <stdexcept>

#include "quadop/errors.hpp"
#include "quadop/parser.hpp"

namespace quadop {

OperadDims dims_of(const QuadOperad& p) {
  return {p.d(), p.free3(), p.relations.dim(), p.p3_dim(), p.p3_dim(), p.relations.dim()};
}

QuadOperad make_operad(const std::string& name, const GeneratorSpace& gens,
                       const std::vector<std::string>& relation_texts) {
  std::vector<VectorQ> parsed;
  parsed.reserve(relation_texts.size());
  for (const auto& text : relation_texts) parsed.push_back(parse_relation(text, gens));
  QuadOperad p;
  p.name = name;
  p.gens = gens;
  p.relations = s3_closure(gens, parsed);
  return p;
}

QuadOperad operad_from_relations(const std::string& name, const GeneratorSpace& gens,
                                 SubspaceQ relations, std::string recipe) {
  if (relations.ambient_dim() != free3_dim(gens.dim()))
    throw InvariantError(name + ": relation space has the wrong ambient dimension");
  if (!is_s3_stable(gens, relations))
    throw InvariantError(name + ": relation space is not S3-stable");
  QuadOperad p;
  p.name = name;
  p.gens = gens;
  p.relations = std::move(relations);
  p.recipe = std::move(recipe);
  return p;
}

P3Projection p3_projection(const QuadOperad& p) {
  const SubspaceQ& r = p.relations;
  P3Projection out;
  out.representatives = r.free_columns();
  out.matrix = MatrixQ(out.representatives.size(), p.free3());
  for (std::size_t k = 0; k < out.representatives.size(); ++k) {
    const std::size_t f = out.representatives[k];
    out.matrix(k, f) = 1;
    for (std::size_t row = 0; row < r.dim(); ++row)
      if (sgn(r.basis()(row, f)) != 0) out.matrix(k, r.pivots()[row]) = -r.basis()(row, f);
  }
  return out;
}

QuadOperad change_basis(const QuadOperad& p, const MatrixQ& t) {
  if (t.rows() != p.d() || t.cols() != p.d())
    throw InputError("change_basis: matrix has the wrong shape");
  if (!(t * p.gens.swap() == p.gens.swap() * t))
    throw InputError("change_basis: matrix does not commute with the swap");
  try {
    (void)inverse(t);
  } catch (const std::domain_error&) {
    throw InputError("change_basis: singular matrix");
  }
  QuadOperad out = p;
  out.relations = image(free3_induced(t), p.relations);
  return out;
}

}  // namespace quadop
