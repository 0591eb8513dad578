#pragma once

// Identities in a, b, c over named operations, each operation a combination of generators.

#include <map>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "quadop/koszul.hpp"
#include "quadop/parser.hpp"

namespace quadop::testing {

using Combination = std::vector<std::pair<Rational, std::string>>;

/// Identity in a, b, c with operations given as generator combinations, e.g. "(a ⊣ b) ⊢ c - a ⊣ (b ⊣ c)".
inline VectorQ translate(const std::string& identity, const GeneratorSpace& v,
                         const std::map<std::string, Combination>& ops) {
  static const std::regex term(R"(([+-]?)\s*(?:\((\w) (\S+) (\w)\) (\S+) (\w)|(\w) (\S+) \((\w) (\S+) (\w)\)))");
  const std::map<std::string, std::string> var{{"a", "x1"}, {"b", "x2"}, {"c", "x3"}};
  VectorQ out(free3_dim(v.dim()));
  for (auto it = std::sregex_iterator(identity.begin(), identity.end(), term); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const Rational sign = m[1] == "-" ? -1 : 1;
    const bool left = m[2].matched;
    const auto& outer = ops.at(left ? m[5].str() : m[8].str());
    const auto& inner = ops.at(left ? m[3].str() : m[10].str());
    for (const auto& [co, go] : outer)
      for (const auto& [ci, gi] : inner) {
        const std::string mono =
            left ? "(" + var.at(m[2]) + " {" + gi + "} " + var.at(m[4]) + ") {" + go + "} " + var.at(m[6])
                 : var.at(m[7]) + " {" + go + "} (" + var.at(m[9]) + " {" + gi + "} " + var.at(m[11]) + ")";
        const VectorQ vec = parse_relation(mono, v);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += sign * co * ci * vec[k];
      }
  }
  return out;
}

/// Right commutativity and left symmetry of (x⊗a)(y⊗b) = xy⊗(a⊣b) + yx⊗(a⊢b), B Zinbiel.
inline const std::vector<std::string> kLeibNovIdentities{
    "(a ⊣ b) ⊣ c - (a ⊣ c) ⊣ b",
    "(a ⊣ b) ⊢ c - (a ⊢ c) ⊣ b",
    "(a ⊢ b) ⊣ c - (a ⊢ c) ⊢ b",
    "(a ⊣ b) ⊢ c - (a ⊢ b) ⊢ c",
    "a ⊣ (b ⊢ c) - a ⊣ (b ⊣ c)",
    "(a ⊣ b) ⊣ c - (b ⊢ a) ⊣ c - a ⊣ (b ⊣ c) + b ⊢ (a ⊣ c)",
    "(a ⊣ b) ⊣ c - (b ⊢ a) ⊣ c - a ⊣ (b ⊢ c) + b ⊢ (a ⊣ c)",
    "(a ⊣ b) ⊢ c - (b ⊢ a) ⊢ c - a ⊢ (b ⊢ c) + b ⊢ (a ⊢ c)",
    "(a ⊢ b) ⊢ c - (b ⊣ a) ⊢ c - a ⊢ (b ⊢ c) + b ⊢ (a ⊢ c)"};

/// Index of the Leibniz generator e1 whose dual satisfies (x1x2)x3 = x1(x2x3) + x1(x3x2); d if none.
inline std::size_t zinbiel_generator(const QuadOperad& leib) {
  const QuadOperad zinb = dual_operad(leib);
  for (std::size_t g = 0; g < leib.d(); ++g) {
    const std::string z = zinb.gens.name(g);
    const std::string text = "(x1 {" + z + "} x2) {" + z + "} x3 - x1 {" + z + "} (x2 {" + z + "} x3) - x1 {" + z +
                             "} (x3 {" + z + "} x2)";
    if (zinb.relations.contains(parse_relation(text, zinb.gens))) return g;
  }
  return leib.d();
}

/// ⊣ = e1•f1 and ⊢ = −((12)e1)•f1 as combinations of the generators of b = black(leib, nov).
inline std::map<std::string, Combination> leib_nov_operations(const QuadOperad& leib, const QuadOperad& nov,
                                                             const QuadOperad& b) {
  const std::size_t e1 = zinbiel_generator(leib);
  const std::size_t f1 = *nov.gens.index_of("g1");
  const VectorQ e2 = leib.gens.swap().column_vector(e1);
  Combination vdash;
  for (std::size_t g = 0; g < leib.d(); ++g)
    if (e2[g] != 0) vdash.push_back({-e2[g], b.gens.name(g * nov.d() + f1)});
  return {{"⊣", {{1, b.gens.name(e1 * nov.d() + f1)}}}, {"⊢", vdash}};
}

}  // namespace quadop::testing
