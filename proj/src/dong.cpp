#include "quadop/dong.hpp"

#include <future>

#include "quadop/errors.hpp"
#include "quadop/koszul.hpp"
#include "quadop/parser.hpp"

namespace quadop {

std::string to_string(Verdict v) { return v == Verdict::Dong ? "DONG" : "NOT DONG"; }

GeneratorSpace dual_display_generators(const QuadOperad& p) {
  GeneratorSpace dual = dual_generators(p.gens);
  if (p.dictionary.empty()) return dual;
  std::vector<std::string> names;
  for (const auto& g : p.gens.names()) {
    auto it = p.dictionary.find(g);
    names.push_back(dual_name(it == p.dictionary.end() ? g : it->second));
  }
  return GeneratorSpace(std::move(names), dual.swap());
}

DongReport dong_verdict(const QuadOperad& p) {
  const std::size_t d = p.d();
  const QuadOperad dual = dual_operad(p);

  DongReport out;
  out.operad = p.name;
  out.dims = dims_of(p);

  // (a) span{(id,i,j)∨} ∩ R⊥.
  std::vector<VectorQ> block;
  for (std::size_t k = 0; k < d * d; ++k) {
    VectorQ v(p.free3());
    v[k] = 1;
    block.push_back(std::move(v));
  }
  const SubspaceQ kernel = subspace_intersect(SubspaceQ::span(block, p.free3()), dual.relations);

  // (b) rank of the images of the same vectors in P!(3).
  const MatrixQ proj = p3_projection(dual).matrix;
  MatrixQ images(d * d, proj.rows());
  for (std::size_t k = 0; k < d * d; ++k)
    for (std::size_t r = 0; r < proj.rows(); ++r) images(k, r) = proj(r, k);
  const std::size_t image_rank = rank(images);

  out.kernel_dim = kernel.dim();
  out.method_agreement = kernel.dim() == d * d - image_rank;
  if (!out.method_agreement)
    throw InvariantError(p.name + ": Dong criterion methods disagree (kernel " +
                         std::to_string(kernel.dim()) + ", rank deficit " +
                         std::to_string(d * d - image_rank) + ")");
  out.verdict = kernel.dim() == 0 ? Verdict::Dong : Verdict::NotDong;

  const GeneratorSpace display = dual_display_generators(p);
  const VariableNames pqt{"p", "q", "t"};
  for (std::size_t r = 0; r < kernel.dim(); ++r) {
    DongWitness w;
    w.vector = kernel.basis().row_vector(r);
    w.text = pretty_print(w.vector, dual.gens);
    w.pqt = pretty_print(w.vector, display, pqt);
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

std::vector<DongReport> dong_table(const std::vector<QuadOperad>& operads) {
  std::vector<std::future<DongReport>> jobs;
  for (const auto& p : operads)
    jobs.push_back(std::async(std::launch::async, [&p] { return dong_verdict(p); }));
  std::vector<DongReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace quadop
