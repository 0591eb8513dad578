#include "quadop/selfcheck.hpp"

#include <functional>

#include "quadop/catalog.hpp"
#include "quadop/dong.hpp"
#include "quadop/koszul.hpp"
#include "quadop/locality.hpp"
#include "quadop/manin.hpp"
#include "quadop/parser.hpp"

namespace quadop {

namespace {

void run(std::vector<CheckResult>& out, const std::string& name, const std::function<std::string()>& body) {
  CheckResult r{name, true, {}};
  try {
    r.detail = body();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

std::string action_homomorphism(const GeneratorSpace& v) {
  const auto actions = free3_actions(v);
  const auto& perms = all_perms();
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      const PermS3 ab = perms[a] * perms[b];
      std::size_t c = 0;
      while (!(perms[c] == ab)) ++c;
      if (!(actions[a] * actions[b] == actions[c]))
        return "M(" + perms[a].to_string() + ")M(" + perms[b].to_string() + ") != M(product)";
    }
  return {};
}

std::string round_trip(const GeneratorSpace& v) {
  for (std::size_t k = 0; k < free3_dim(v.dim()); ++k) {
    VectorQ e(free3_dim(v.dim()));
    e[k] = 1;
    if (parse_relation(pretty_print(e, v), v) != e) return "basis vector " + std::to_string(k);
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;
  for (const auto& name : catalog_names()) {
    run(out, name + ": S3 action is a homomorphism", [&] { return action_homomorphism(catalog(name).gens); });
    run(out, name + ": parser round trip", [&] { return round_trip(catalog(name).gens); });
    run(out, name + ": relations are S3-stable", [&] {
      const QuadOperad p = catalog(name);
      return is_s3_stable(p.gens, p.relations) ? "" : "not stable";
    });
    run(out, name + ": double dual", [&] {
      const QuadOperad p = catalog(name);
      const QuadOperad dd = dual_operad(dual_operad(p));
      if (dd.relations != p.relations) return std::string("(R^perp)^perp != R");
      if (!(dd.gens == p.gens)) return std::string("generators do not return");
      return std::string();
    });
    run(out, name + ": pairing equivariance", [&] {
      return pairing_matrix(catalog(name).gens).is_equivariant() ? "" : "not equivariant";
    });
    run(out, name + ": Jacobi characterization of the dual", [&] {
      const QuadOperad p = catalog(name);
      return verify_jacobi_duality(p, dual_operad(p)).failure;
    });
    run(out, name + ": Dong methods agree", [&] {
      return dong_verdict(catalog(name)).method_agreement ? "" : "disagree";
    });
  }
  for (const char* name : {"As", "Nov", "Pois"}) {
    run(out, std::string("white(Com,") + name + ") = " + name, [&] {
      const QuadOperad p = catalog(name);
      return white_product(catalog("Com"), p).relations == p.relations ? "" : "relations differ";
    });
    run(out, std::string("black(") + name + ",Lie) dims", [&] {
      const QuadOperad p = catalog(name);
      return dims_of(black_product(p, catalog("Lie"))) == dims_of(p) ? "" : "dims differ";
    });
  }
  const std::vector<std::pair<std::string, std::string>> pairs{{"Leib", "Nov"}, {"Nov", "Pois"}, {"As", "Lie"}};
  for (const auto& [a, b] : pairs) {
    run(out, "black(" + a + "," + b + ") = direct construction", [&] {
      const QuadOperad p = catalog(a), q = catalog(b);
      return black_product(p, q).relations == black_direct(p, q).relations ? "" : "subspaces differ";
    });
    run(out, "black(" + a + "," + b + ") tensor characterization", [&] {
      const QuadOperad p = catalog(a), q = catalog(b);
      return verify_black_tensor(p, q, black_product(p, q)).failure;
    });
  }
  run(out, "pre(Lie) is dual to Perm", [] {
    const QuadOperad s = split(catalog("Lie"), SplitMode::Pre);
    return dims_of(dual_operad(s)) == dims_of(catalog("Perm")) ? "" : "dims differ";
  });
  run(out, "locality: Lie is local with N <= 2, monotone in N", [] {
    const LocalityInstance inst(catalog("Lie"), 4);
    const auto order = min_locality_order(inst, 0, 0, 0, 3);
    if (!order || *order > 2) return std::string("no order <= 2");
    const SparseQ next = residue_vector(inst, {0, 0, 0, *order + 1, 0, 0});
    return inst.contains(next, 0) ? std::string() : std::string("order + 1 not in ideal");
  });
  return out;
}

}  // namespace quadop
