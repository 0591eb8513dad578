#include "quadop/manin.hpp"

#include <array>

#include "quadop/catalog.hpp"
#include "quadop/errors.hpp"
#include "quadop/koszul.hpp"

namespace quadop {

std::string to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::White: return "white";
    case ProductKind::Black: return "black";
    case ProductKind::Di: return "di";
    case ProductKind::Tri: return "tri";
    case ProductKind::SplitPre: return "pre";
    case ProductKind::SplitPost: return "post";
  }
  return "unknown";
}

namespace {

GeneratorSpace tensor_generators(const GeneratorSpace& v, const GeneratorSpace& w,
                                 const std::string& joiner, const Rational& sign) {
  std::vector<std::string> names;
  for (const auto& a : v.names())
    for (const auto& b : w.names()) names.push_back(a + joiner + b);
  return GeneratorSpace(std::move(names), kron(v.swap(), w.swap()) * sign);
}

// Index in F_{V⊗W}(3) of (σ, (i,p), (j,q)) where (i,p) is the outer and (j,q) the inner pair.
std::size_t interleaved_index(int coset, std::size_t i, std::size_t p, std::size_t j,
                              std::size_t q, std::size_t e, std::size_t de) {
  return free3_index(coset, i * e + p, j * e + q, de);
}

}  // namespace

QuadOperad white_product(const QuadOperad& p, const QuadOperad& q) {
  const std::size_t d = p.d(), e = q.d(), de = d * e;
  GeneratorSpace gens = tensor_generators(p.gens, q.gens, "*", 1);
  const MatrixQ proj_p = p3_projection(p).matrix;
  const MatrixQ proj_q = p3_projection(q).matrix;
  const std::size_t dim_p = proj_p.rows(), dim_q = proj_q.rows();

  MatrixQ interleave(dim_p * dim_q, free3_dim(de));
  for (int s = 0; s < 3; ++s)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t col_p = free3_index(s, i, j, d);
        for (std::size_t a = 0; a < dim_p; ++a) {
          const Rational& x = proj_p(a, col_p);
          if (sgn(x) == 0) continue;
          for (std::size_t pp = 0; pp < e; ++pp)
            for (std::size_t qq = 0; qq < e; ++qq) {
              const std::size_t col_q = free3_index(s, pp, qq, e);
              const std::size_t col = interleaved_index(s, i, pp, j, qq, e, de);
              for (std::size_t b = 0; b < dim_q; ++b)
                if (sgn(proj_q(b, col_q)) != 0) interleave(a * dim_q + b, col) = x * proj_q(b, col_q);
            }
        }
      }
  const std::string label = "white(" + p.name + "," + q.name + ")";
  return operad_from_relations(label, gens, kernel_basis(interleave), label);
}

QuadOperad black_product(const QuadOperad& p, const QuadOperad& q) {
  QuadOperad white_of_duals = white_product(dual_operad(p), dual_operad(q));
  QuadOperad dual = dual_operad(white_of_duals);
  const std::string label = "black(" + p.name + "," + q.name + ")";
  GeneratorSpace gens = tensor_generators(p.gens, q.gens, "•", -1);
  if (!(gens.swap() == dual.gens.swap()))
    throw InvariantError(label + ": dual of the white product has an unexpected swap matrix");
  return operad_from_relations(label, gens, dual.relations, label);
}

QuadOperad black_direct(const QuadOperad& p, const QuadOperad& q) {
  const std::size_t d = p.d(), e = q.d(), de = d * e;
  GeneratorSpace gens = tensor_generators(p.gens, q.gens, "•", -1);
  const std::size_t n = free3_dim(de);
  std::vector<VectorQ> images;
  const auto& r = p.relations.basis();
  const auto& s = q.relations.basis();
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = 0; b < s.rows(); ++b) {
      VectorQ v(n);
      for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            const Rational& x = r(a, free3_index(c, i, j, d));
            if (sgn(x) == 0) continue;
            for (std::size_t pp = 0; pp < e; ++pp)
              for (std::size_t qq = 0; qq < e; ++qq) {
                const Rational& y = s(b, free3_index(c, pp, qq, e));
                if (sgn(y) != 0) v[interleaved_index(c, i, pp, j, qq, e, de)] += x * y;
              }
          }
      images.push_back(std::move(v));
    }
  const std::string label = "black(" + p.name + "," + q.name + ")";
  return operad_from_relations(label, gens, SubspaceQ::span(images, n), label + "[direct]");
}

QuadOperad replicate(const QuadOperad& p, ReplicationMode mode) {
  const bool di = mode == ReplicationMode::Di;
  QuadOperad out = white_product(catalog(di ? "Perm" : "ComTriAs"), p);
  out.name = (di ? "di" : "tri") + p.name;
  out.recipe = std::string(di ? "di(" : "tri(") + p.name + ")";
  return out;
}

namespace {

// A linear combination of split generators.
using SplitOp = std::vector<std::pair<std::size_t, Rational>>;

struct SplitOps {
  std::size_t d;
  bool post;

  SplitOp succ(std::size_t w) const { return {{w, 1}}; }
  // ≺ in the substitution table is −prec.
  SplitOp prec(std::size_t w) const { return {{d + w, -1}}; }
  SplitOp perp(std::size_t w) const { return {{2 * d + w, 1}}; }
  SplitOp star(std::size_t w) const {
    SplitOp out = succ(w);
    for (auto& t : prec(w)) out.push_back(t);
    if (post)
      for (auto& t : perp(w)) out.push_back(t);
    return out;
  }
};

GeneratorSpace split_space(const GeneratorSpace& w, bool post) {
  const std::size_t d = w.dim();
  const std::size_t blocks = post ? 3 : 2;
  std::vector<std::string> names;
  for (const char* prefix : {"succ_", "prec_", "perp_"}) {
    if (names.size() == blocks * d) break;
    for (const auto& g : w.names()) names.push_back(prefix + g);
  }
  MatrixQ swap(blocks * d, blocks * d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& a = w.swap()(m, k);
      if (sgn(a) == 0) continue;
      swap(d + m, k) = -a;  // (12)·succ_k = −prec_{(12)k}
      swap(m, d + k) = -a;  // (12)·prec_k = −succ_{(12)k}
      if (post) swap(2 * d + m, 2 * d + k) = a;
    }
  return GeneratorSpace(std::move(names), std::move(swap));
}

// u_M for the monomial (x_{k1} ∘_inner x_{k2}) ∘_outer x_{k3}; `marked` flags positions 1..3.
std::pair<SplitOp, SplitOp> split_monomial(const SplitOps& ops, std::array<bool, 3> marked,
                                           std::size_t outer, std::size_t inner) {
  const auto [m1, m2, m3] = marked;
  if (m1 && m2 && m3) return {ops.perp(inner), ops.perp(outer)};
  if (m1 && m2) return {ops.perp(inner), ops.prec(outer)};
  if (m1 && m3) return {ops.prec(inner), ops.perp(outer)};
  if (m2 && m3) return {ops.succ(inner), ops.perp(outer)};
  if (m1) return {ops.prec(inner), ops.prec(outer)};
  if (m2) return {ops.succ(inner), ops.prec(outer)};
  return {ops.star(inner), ops.succ(outer)};
}

}  // namespace

GeneratorSpace split_generators(const GeneratorSpace& w, SplitMode mode) {
  const bool post = mode == SplitMode::Post;
  const std::size_t d = w.dim();
  GeneratorSpace gens = split_space(w, post);
  // An antisymmetric generator must split into ≻, ≺ exchanged by (12) and an antisymmetric ⊥.
  for (std::size_t g = 0; g < d; ++g) {
    bool antisym = true;
    for (std::size_t m = 0; m < d; ++m) antisym = antisym && w.swap()(m, g) == (m == g ? -1 : 0);
    if (!antisym) continue;
    if (gens.swap()(d + g, g) != 1 || gens.swap()(g, d + g) != 1 ||
        (post && gens.swap()(2 * d + g, 2 * d + g) != -1))
      throw InvariantError("split: generator " + w.name(g) + " does not split as in preLie/postLie");
  }
  return gens;
}

std::vector<VectorQ> split_relation_images(const QuadOperad& q, SplitMode mode) {
  const bool post = mode == SplitMode::Post;
  const std::size_t d = q.d();
  const std::size_t sd = (post ? 3 : 2) * d;
  const SplitOps ops{d, post};

  std::vector<VectorQ> out;
  for (unsigned mask = 1; mask < 8; ++mask) {
    if (!post && (mask & (mask - 1)) != 0) continue;  // singletons only
    for (std::size_t r = 0; r < q.relations.dim(); ++r) {
      VectorQ f(free3_dim(sd));
      for (std::size_t k = 0; k < q.free3(); ++k) {
        const Rational& c = q.relations.basis()(r, k);
        if (sgn(c) == 0) continue;
        const Free3Index idx = free3_decode(k, d);
        const PermS3& sigma = coset_reps()[idx.coset];
        std::array<bool, 3> marked{};
        for (int pos = 0; pos < 3; ++pos) marked[pos] = (mask >> (sigma(pos + 1) - 1)) & 1u;
        auto [inner_op, outer_op] = split_monomial(ops, marked, idx.outer, idx.inner);
        for (const auto& [go, co] : outer_op)
          for (const auto& [gi, ci] : inner_op) f[free3_index(idx.coset, go, gi, sd)] += c * co * ci;
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

QuadOperad split(const QuadOperad& q, SplitMode mode) {
  const bool post = mode == SplitMode::Post;
  GeneratorSpace gens = split_generators(q.gens, mode);
  const std::string label = std::string(post ? "post" : "pre") + "(" + q.name + ")";
  QuadOperad out;
  out.name = label;
  out.relations = s3_closure(gens, split_relation_images(q, mode));
  out.gens = std::move(gens);
  out.recipe = label;
  return out;
}

TensorCheck verify_black_tensor(const QuadOperad& p, const QuadOperad& q, const QuadOperad& b) {
  const std::size_t d = p.d(), e = q.d();
  if (b.d() != d * e)
    throw InputError("verify_black_tensor: " + b.name + " has " + std::to_string(b.d()) +
                     " generators, expected " + std::to_string(d * e));
  const QuadOperad dual = dual_operad(p);
  const MatrixQ proj_dual = p3_projection(dual).matrix;
  const MatrixQ proj_b = p3_projection(b).matrix;
  const std::size_t dim_dual = proj_dual.rows(), dim_b = proj_b.rows();
  const std::size_t de = d * e;

  TensorCheck out;
  for (std::size_t r = 0; r < q.relations.dim(); ++r) {
    VectorQ total(dim_dual * dim_b);
    for (std::size_t k = 0; k < q.free3(); ++k) {
      const Rational& h = q.relations.basis()(r, k);
      if (sgn(h) == 0) continue;
      const Free3Index idx = free3_decode(k, e);
      for (std::size_t io = 0; io < d; ++io)
        for (std::size_t ii = 0; ii < d; ++ii) {
          const std::size_t col_dual = free3_index(idx.coset, io, ii, d);
          const std::size_t col_b = free3_index(idx.coset, io * e + idx.outer, ii * e + idx.inner, de);
          for (std::size_t a = 0; a < dim_dual; ++a) {
            const Rational& x = proj_dual(a, col_dual);
            if (sgn(x) == 0) continue;
            for (std::size_t c = 0; c < dim_b; ++c)
              if (sgn(proj_b(c, col_b)) != 0) total[a * dim_b + c] += h * x * proj_b(c, col_b);
          }
        }
    }
    if (!is_zero(total)) {
      out.pass = false;
      out.failure = "relation " + std::to_string(r) + " of " + q.name + " fails on " +
                    dual.name + " (x) " + b.name;
      out.relation = r;
      out.witness = std::move(total);
      return out;
    }
  }
  return out;
}

}  // namespace quadop
