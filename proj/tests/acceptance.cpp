// Acceptance criteria: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "identity_translate.hpp"
#include "quadop/catalog.hpp"
#include "quadop/dong.hpp"
#include "quadop/koszul.hpp"
#include "quadop/locality.hpp"
#include "quadop/manin.hpp"
#include "quadop/parser.hpp"
#include "random_operads.hpp"

using namespace quadop;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

bool is_dong(const QuadOperad& p) { return dong_verdict(p).verdict == Verdict::Dong; }

std::string dims_text(const QuadOperad& p) {
  std::ostringstream os;
  os << "(" << p.d() << "," << p.relations.dim() << "," << p.p3_dim() << ")";
  return os.str();
}

Outcome np_dimension() {
  const QuadOperad np = catalog("NP");
  const QuadOperad dual = dual_operad(np);
  Outcome o;
  o.pass = np.relations.dim() == 16 && np.p3_dim() == 11 && dual.p3_dim() == 16;
  o.detail = "dim R = " + std::to_string(np.relations.dim()) + ", dim NP(3) = " + std::to_string(np.p3_dim()) +
             ", dim NP!(3) = " + std::to_string(dual.p3_dim());
  return o;
}

QuadOperad named(const std::string& name) {
  if (name.back() == '!') return dual_operad(catalog(name.substr(0, name.size() - 1)));
  return catalog(name);
}

Outcome verdict_table() {
  const std::vector<std::string> dong{"Com", "Lie",  "As",   "Pois",  "Nov", "NP",      "Alt",
                                      "Perm", "Leib", "diAs", "diNov", "GD!", "ComTriAs"};
  const std::vector<std::string> not_dong{"Zinb", "preLie", "preAs", "NP!", "GD", "postLie"};
  std::vector<QuadOperad> ops;
  for (const auto& n : dong) ops.push_back(named(n));
  for (const auto& n : not_dong) ops.push_back(named(n));
  const auto table = dong_table(ops);
  Outcome o;
  std::string mismatches;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const Verdict expected = k < dong.size() ? Verdict::Dong : Verdict::NotDong;
    if (table[k].verdict != expected) {
      o.pass = false;
      mismatches += " " + table[k].operad + " computed " + to_string(table[k].verdict) + ", expected " +
                    to_string(expected) + ";";
    }
  }
  o.detail = std::to_string(table.size()) + " operads" + (o.pass ? ", all match" : ", mismatches:" + mismatches);
  return o;
}

Outcome pre_as_witness() {
  const QuadOperad pre_as = catalog("preAs");
  const DongReport r = dong_verdict(pre_as);
  const VectorQ target = parse_relation("(x1 {⊢} x2) {⊢} x3 - (x1 {⊣} x2) {⊢} x3", dual_display_generators(pre_as));
  std::vector<VectorQ> rows;
  for (const auto& w : r.witnesses) rows.push_back(w.vector);
  Outcome o;
  o.pass = r.verdict == Verdict::NotDong && SubspaceQ::span(rows, pre_as.free3()).contains(target);
  o.detail = "kernel dim " + std::to_string(r.kernel_dim) + ", (p {⊢} q) {⊢} t - (p {⊣} q) {⊢} t " +
             (o.pass ? "in kernel" : "missing");
  return o;
}

Outcome involutivity() {
  Outcome o;
  std::size_t count = 0;
  auto check = [&](const QuadOperad& p) {
    const QuadOperad q = dual_operad(p);
    const bool ok = q.relations.dim() + p.relations.dim() == p.free3() && dual_operad(q).relations == p.relations;
    if (!ok) {
      o.pass = false;
      o.detail += " " + p.name;
    }
    ++count;
  };
  for (const auto& n : catalog_names()) check(catalog(n));
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) check(testing::random_operad(rng, 1 + trial % 3, 1 + trial % 3));
  o.detail = std::to_string(count) + " operads" + (o.pass ? ", (R^perp)^perp = R throughout" : ", failing:" + o.detail);
  return o;
}

Outcome jacobi() {
  Outcome o;
  for (const auto& n : catalog_names()) {
    const QuadOperad p = catalog(n);
    if (!verify_jacobi_duality(p, dual_operad(p)).pass) {
      o.pass = false;
      o.detail += " " + n;
    }
  }
  const QuadOperad pois = catalog("Pois");
  const QuadOperad partial = make_operad(
      "PoisNoLeibniz", pois.gens,
      {"(x1 {e1} x2) {e1} x3 - x1 {e1} (x2 {e1} x3)", "(x1 {e2} x2) {e2} x3 + (x2 {e2} x3) {e2} x1 + (x3 {e2} x1) {e2} x2"});
  const JacobiCheck perturbed = verify_jacobi_duality(partial, dual_operad(pois));
  const bool rejected = !perturbed.pass && perturbed.witness && !perturbed.witness->is_zero();
  o.pass = o.pass && rejected;
  o.detail = std::to_string(catalog_names().size()) + " catalog pairs" + (o.detail.empty() ? " pass" : " fail:" + o.detail) +
             "; Pois without the Leibniz rule " + (rejected ? "rejected" : "accepted");
  return o;
}

Outcome equivariance() {
  Outcome o;
  std::mt19937 rng(77);
  std::size_t pairs = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const GeneratorSpace v = testing::random_generators(rng, d);
    const DualPairing pr = pairing_matrix(v);
    const std::size_t n = free3_dim(d);
    for (const auto& pi : all_perms()) {
      const MatrixQ a = free3_action(pr.primal, pi);
      const MatrixQ b = free3_action(pr.dual, pi);
      const MatrixQ lhs = b.transpose() * pr.matrix * a;
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) {
          ++pairs;
          if (lhs(f, g) != pi.sign() * pr.matrix(f, g)) o.pass = false;
        }
    }
  }
  o.detail = std::to_string(pairs) + " (pi, f, g) triples over 10 random involutions, d <= 4";
  return o;
}

Outcome products() {
  Outcome o;
  std::string notes;
  for (const char* name : {"As", "Nov", "Pois"}) {
    const QuadOperad p = catalog(name);
    const QuadOperad w = white_product(catalog("Com"), p);
    const QuadOperad b = black_product(p, catalog("Lie"));
    const bool ok = w.gens.swap() == p.gens.swap() && w.relations == p.relations && b.d() == p.d() &&
                    b.relations.dim() == p.relations.dim();
    if (!ok) {
      o.pass = false;
      notes += " unit:" + std::string(name);
    }
  }
  for (const auto& [a, c] : std::vector<std::pair<std::string, std::string>>{{"Leib", "Nov"}, {"Nov", "Pois"}, {"As", "Lie"}}) {
    if (black_product(catalog(a), catalog(c)).relations != black_direct(catalog(a), catalog(c)).relations) {
      o.pass = false;
      notes += " direct:" + a + "," + c;
    }
  }
  o.detail = o.pass ? "white(Com,P) = P, black(P,Lie) dims = P dims, black = black_direct on 3 pairs"
                    : "failing:" + notes;
  return o;
}

Outcome leib_nov() {
  const QuadOperad leib = catalog("Leib"), nov = catalog("Nov");
  const QuadOperad b = black_product(leib, nov);
  const auto ops = testing::leib_nov_operations(leib, nov, b);
  std::size_t members = 0;
  for (const auto& identity : testing::kLeibNovIdentities) {
    const VectorQ v = testing::translate(identity, b.gens, ops);
    if (!is_zero(v) && b.relations.contains(v)) ++members;
  }
  const std::size_t white_dim = white_product(catalog("Perm"), nov).relations.dim();
  Outcome o;
  o.pass = members == testing::kLeibNovIdentities.size() && b.relations.dim() == white_dim;
  o.detail = std::to_string(members) + "/9 identities are relations; dim R = " + std::to_string(b.relations.dim()) +
             ", dim R(white(Perm,Nov)) = " + std::to_string(white_dim);
  return o;
}

Outcome closures() {
  Outcome o;
  const std::vector<std::string> base{"Com", "Lie", "As", "Nov", "Pois"};
  std::size_t checks = 0;
  std::string bad;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j, ++checks)
      if (!is_dong(black_product(catalog(base[i]), catalog(base[j])))) bad += " black(" + base[i] + "," + base[j] + ")";
  for (const auto& n : base) {
    checks += 2;
    if (!is_dong(replicate(catalog(n), ReplicationMode::Di))) bad += " di" + n;
    if (!is_dong(replicate(catalog(n), ReplicationMode::Tri))) bad += " tri" + n;
  }
  for (const auto& n : textual_catalog_names()) {
    checks += 2;
    if (is_dong(split(catalog(n), SplitMode::Pre))) bad += " pre(" + n + ")";
    if (is_dong(split(catalog(n), SplitMode::Post))) bad += " post(" + n + ")";
  }
  o.pass = bad.empty();
  o.detail = std::to_string(checks) + " verdicts" + (o.pass ? " as predicted" : ", wrong:" + bad);
  return o;
}

Outcome basis_invariance() {
  Outcome o;
  std::mt19937 rng(99);
  std::size_t trials = 0;
  for (const auto& n : catalog_names()) {
    const QuadOperad p = catalog(n);
    const Verdict v = dong_verdict(p).verdict;
    for (int t = 0; t < 10; ++t, ++trials)
      if (dong_verdict(change_basis(p, testing::random_equivariant(rng, p.gens.swap()))).verdict != v) {
        o.pass = false;
        o.detail += " " + n;
      }
  }
  o.detail = std::to_string(trials) + " basis changes" + (o.pass ? ", verdicts unchanged" : ", changed:" + o.detail);
  return o;
}

Outcome locality() {
  Outcome o;
  std::string summary;
  for (const char* name : {"Lie", "Com", "Nov", "preLie", "Zinb"}) {
    const QuadOperad p = catalog(name);
    const LocalitySweep s = locality_sweep(build_instance(p, 6), 4);
    const bool dong = is_dong(p);
    if (s.all_local() != dong) o.pass = false;
    summary += std::string(" ") + name + "[";
    for (std::size_t k = 0; k < s.pairs.size(); ++k)
      summary += (k ? "," : "") + (s.pairs[k].order ? std::to_string(*s.pairs[k].order) : std::string("-"));
    summary += "]";
    if (std::string(name) == "Lie" && !(s.pairs.size() == 1 && s.pairs[0].order && *s.pairs[0].order <= 2))
      o.pass = false;
  }
  o.detail = "all pairs local iff Dong; minimal N per (inner,outer) pair:" + summary;
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::mt19937 rng(500);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const GeneratorSpace v = testing::random_generators(rng, dim(rng));
    const VectorQ w = testing::random_matrix(rng, 1, free3_dim(v.dim()), 5).row_vector(0);
    if (parse_relation(pretty_print(w, v), v) != w) ++failures;
  }
  o.pass = failures == 0;
  o.detail = "500 random vectors, " + std::to_string(failures) + " mismatches";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "NP relation dimension", 1, np_dimension},
      {2, "Dong verdict table", 10, verdict_table},
      {3, "preAs witness", 1, pre_as_witness},
      {4, "duality involutivity", 10, involutivity},
      {5, "Jacobi validation", 5, jacobi},
      {6, "pairing equivariance", 5, equivariance},
      {7, "product identities", 60, products},
      {8, "diLie black Nov worked example", 60, leib_nov},
      {9, "closure theorems", 300, closures},
      {10, "basis invariance", 30, basis_invariance},
      {11, "locality sweep", 1800, locality},
      {12, "parser round trip", 5, round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s %2d %s: %s (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), seconds, c.limit_seconds, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
