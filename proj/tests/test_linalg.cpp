#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quadop/linalg.hpp"
#include "random_operads.hpp"

using namespace quadop;

namespace {

VectorQ vec(std::initializer_list<long> xs) {
  VectorQ v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rref of small matrices") {
  CHECK(rref_canonical(MatrixQ{{2, 4}, {1, 2}}) == MatrixQ{{1, 2}});
  CHECK(rref_canonical(MatrixQ{{0, 0}}).rows() == 0);
  CHECK(rref_canonical(MatrixQ{{1, 2}, {3, 4}}) == MatrixQ::identity(2));
}

TEST_CASE("rref is idempotent and independent of row order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const MatrixQ m = testing::random_matrix(rng, 4, 6);
    const MatrixQ r = rref_canonical(m);
    CHECK(rref_canonical(r) == r);
    std::vector<VectorQ> rows;
    for (std::size_t i = m.rows(); i-- > 0;) rows.push_back(m.row_vector(i));
    CHECK(rref_canonical(MatrixQ::from_rows(rows, m.cols())) == r);
  }
}

TEST_CASE("kernels") {
  CHECK(kernel_basis(MatrixQ::identity(3)).dim() == 0);
  const SubspaceQ k = kernel_basis(MatrixQ{{1, 1}});
  REQUIRE(k.dim() == 1);
  CHECK(k.basis() == MatrixQ{{1, -1}});
  const SubspaceQ k2 = kernel_basis(MatrixQ{{1, 2, 3}, {4, 5, 6}});
  CHECK(k2.dim() == 1);
  CHECK(k2.contains(vec({1, -2, 1})));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const MatrixQ m = testing::random_matrix(rng, 3 + trial % 3, 7);
    const SubspaceQ ker = kernel_basis(m);
    CHECK(ker.dim() == m.cols() - rank(m));
    for (std::size_t r = 0; r < ker.dim(); ++r) CHECK(is_zero(m * ker.basis().row(r)));
  }
}

TEST_CASE("sum, intersection and containment") {
  const SubspaceQ u = SubspaceQ::span(std::vector<VectorQ>{vec({1, 0})}, 2);
  const SubspaceQ w = SubspaceQ::span(std::vector<VectorQ>{vec({0, 1})}, 2);
  CHECK(subspace_intersect(u, w).dim() == 0);
  CHECK(subspace_sum(u, w) == SubspaceQ::full(2));
  CHECK(subspace_intersect(u, u) == u);

  const SubspaceQ a = SubspaceQ::span(std::vector<VectorQ>{vec({1, 1, 0}), vec({0, 1, 1})}, 3);
  const SubspaceQ b = SubspaceQ::span(std::vector<VectorQ>{vec({1, 0, -1})}, 3);
  CHECK(subspace_intersect(a, b) == b);
  CHECK(a.contains(b));
  CHECK_FALSE(b.contains(a));
  CHECK_THROWS_AS(subspace_sum(a, u), DimensionError);
}

TEST_CASE("dimension formula on random subspaces") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const SubspaceQ u = SubspaceQ::span(testing::random_matrix(rng, 1 + trial % 4, 6, 1));
    const SubspaceQ w = SubspaceQ::span(testing::random_matrix(rng, 1 + trial % 3, 6, 1));
    CHECK(u.dim() + w.dim() == subspace_sum(u, w).dim() + subspace_intersect(u, w).dim());
    const SubspaceQ cap = subspace_intersect(u, w);
    CHECK(u.contains(cap));
    CHECK(w.contains(cap));
  }
}

TEST_CASE("annihilator") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const SubspaceQ u = SubspaceQ::span(testing::random_matrix(rng, 2, 5));
    const SubspaceQ perp = annihilator(u);
    CHECK(u.dim() + perp.dim() == 5);
    CHECK(annihilator(perp) == u);
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t j = 0; j < perp.dim(); ++j) {
        Rational dot = 0;
        for (std::size_t c = 0; c < 5; ++c) dot += u.basis()(i, c) * perp.basis()(j, c);
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("inverse, products and kron") {
  const MatrixQ m{{1, 2}, {3, 4}};
  CHECK(m * inverse(m) == MatrixQ::identity(2));
  CHECK_THROWS_AS(inverse(MatrixQ{{1, 2}, {2, 4}}), std::domain_error);
  const MatrixQ k = kron(MatrixQ{{0, 1}, {1, 0}}, MatrixQ{{2}});
  CHECK(k == MatrixQ{{0, 2}, {2, 0}});
  CHECK(m.transpose() == MatrixQ{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(m * MatrixQ(3, 1), DimensionError);
}

TEST_CASE("rational text round trip") {
  for (const char* text : {"0", "1", "-1", "3/4", "-22/7", "123456789012345678901234567890/7"}) {
    const Rational q = parse_rational(text);
    CHECK(parse_rational(to_string(q)) == q);
  }
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(to_string(parse_rational("6/8")) == "3/4");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("image of a subspace") {
  const MatrixQ proj{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  const SubspaceQ u = SubspaceQ::span(std::vector<VectorQ>{vec({1, 1, 1}), vec({0, 0, 1})}, 3);
  CHECK(image(proj, u) == SubspaceQ::span(std::vector<VectorQ>{vec({1, 1, 0})}, 3));
}
