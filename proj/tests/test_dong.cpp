#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quadop/catalog.hpp"
#include "quadop/dong.hpp"
#include "quadop/errors.hpp"
#include "quadop/koszul.hpp"
#include "quadop/parser.hpp"
#include "random_operads.hpp"

using namespace quadop;

namespace {

/// d² minus the rank of the id-block basis vectors in P!(3).
std::size_t expected_kernel_dim(const QuadOperad& p) {
  const QuadOperad dual = dual_operad(p);
  const P3Projection proj = p3_projection(dual);
  const std::size_t d = p.d();
  MatrixQ images(d * d, proj.matrix.rows());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t col = free3_index(0, i, j, d);
      for (std::size_t r = 0; r < proj.matrix.rows(); ++r) images(i * d + j, r) = proj.matrix(r, col);
    }
  return d * d - rank(images);
}

}  // namespace

TEST_CASE("verdicts on named operads") {
  const DongReport nov = dong_verdict(catalog("Nov"));
  CHECK(nov.verdict == Verdict::Dong);
  CHECK(nov.kernel_dim == 0);
  CHECK(nov.witnesses.empty());
  CHECK(nov.method_agreement);
  CHECK(nov.dims == OperadDims{2, 12, 6, 6, 6, 6});
  CHECK(to_string(nov.verdict) == "DONG");

  const DongReport zinb = dong_verdict(catalog("Zinb"));
  CHECK(zinb.verdict == Verdict::NotDong);
  CHECK(zinb.kernel_dim > 0);
  CHECK(zinb.witnesses.size() == zinb.kernel_dim);
  CHECK(to_string(zinb.verdict) == "NOT DONG");
}

TEST_CASE("preAs witness") {
  const QuadOperad pre_as = catalog("preAs");
  const DongReport r = dong_verdict(pre_as);
  REQUIRE(r.verdict == Verdict::NotDong);
  const VectorQ target =
      parse_relation("(x1 {⊢} x2) {⊢} x3 - (x1 {⊣} x2) {⊢} x3", dual_display_generators(pre_as));
  std::vector<VectorQ> rows;
  for (const auto& w : r.witnesses) rows.push_back(w.vector);
  CHECK(SubspaceQ::span(rows, pre_as.free3()).contains(target));
  CHECK(dual_operad(pre_as).relations.contains(target));
  bool printed = false;
  for (const auto& w : r.witnesses) printed = printed || w.pqt == "(p {⊢} q) {⊢} t - (p {⊣} q) {⊢} t";
  CHECK(printed);
}

TEST_CASE("witnesses re-parse and lie in the block") {
  for (const char* name : {"Zinb", "preLie", "preAs", "GD", "postLie"}) {
    CAPTURE(name);
    const QuadOperad p = catalog(name);
    const QuadOperad dual = dual_operad(p);
    const DongReport r = dong_verdict(p);
    for (const auto& w : r.witnesses) {
      CHECK(parse_relation(w.text, dual.gens) == w.vector);
      CHECK(dual.relations.contains(w.vector));
      for (std::size_t k = p.d() * p.d(); k < p.free3(); ++k) CHECK(w.vector[k] == 0);
    }
  }
}

TEST_CASE("empty generator space is vacuously Dong") {
  const QuadOperad zero = make_operad("Zero", GeneratorSpace({}, MatrixQ(0, 0)), {});
  const DongReport r = dong_verdict(zero);
  CHECK(r.verdict == Verdict::Dong);
  CHECK(r.kernel_dim == 0);
}

TEST_CASE("methods agree on random operads") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const QuadOperad p = testing::random_operad(rng, 1 + trial % 3, 1 + trial % 4);
    const DongReport r = dong_verdict(p);
    CHECK(r.method_agreement);
    CHECK(r.kernel_dim == expected_kernel_dim(p));
    CHECK((r.verdict == Verdict::Dong) == (r.kernel_dim == 0));
  }
}

TEST_CASE("verdict is invariant under equivariant basis change") {
  std::mt19937 rng(13);
  for (const char* name : {"Lie", "As", "Pois", "Nov", "Zinb", "preLie", "NP"}) {
    CAPTURE(name);
    const QuadOperad p = catalog(name);
    const DongReport base = dong_verdict(p);
    for (int trial = 0; trial < 3; ++trial) {
      const DongReport r = dong_verdict(change_basis(p, testing::random_equivariant(rng, p.gens.swap())));
      CHECK(r.verdict == base.verdict);
      CHECK(r.kernel_dim == base.kernel_dim);
    }
  }
}

TEST_CASE("verdict is invariant under relation reshuffling") {
  std::mt19937 rng(19);
  for (const char* name : {"Pois", "Zinb", "GD"}) {
    const QuadOperad p = catalog(name);
    const MatrixQ mix = testing::random_invertible(rng, p.relations.dim());
    MatrixQ rows = mix * p.relations.basis();
    rows.append_row(p.relations.basis().row(0));
    const QuadOperad q = operad_from_relations(name, p.gens, SubspaceQ::span(rows));
    CHECK(dong_verdict(q).verdict == dong_verdict(p).verdict);
    CHECK(dong_verdict(q).kernel_dim == dong_verdict(p).kernel_dim);
  }
}

TEST_CASE("batch table keeps input order") {
  std::vector<QuadOperad> ops;
  const std::vector<std::string> names{"Pois", "Zinb", "Nov", "preLie", "Alt", "GD", "Lie", "postLie"};
  for (const auto& n : names) ops.push_back(catalog(n));
  ops.push_back(dual_operad(catalog("GD")));
  const auto table = dong_table(ops);
  REQUIRE(table.size() == ops.size());
  for (std::size_t k = 0; k < names.size(); ++k) CHECK(table[k].operad == names[k]);
  CHECK(table[8].operad == "GD!");
  const std::vector<Verdict> expected{Verdict::Dong,    Verdict::NotDong, Verdict::Dong,
                                      Verdict::NotDong, Verdict::Dong,    Verdict::NotDong,
                                      Verdict::Dong,    Verdict::NotDong, Verdict::Dong};
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(table[k].verdict == expected[k]);
}
