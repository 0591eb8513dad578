#include "quadop/catalog.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "quadop/errors.hpp"
#include "quadop/koszul.hpp"
#include "quadop/manin.hpp"

namespace quadop {

namespace {

const char* const kAssoc = "(x1 {m} x2) {m} x3 - x1 {m} (x2 {m} x3)";

// Left symmetry and right commutativity of x1 ∘ x2 = x1 {g1} x2.
const char* const kNovLeftSym =
    "(x1 {g1} x2) {g1} x3 - (x2 {g1} x1) {g1} x3 - x1 {g1} (x2 {g1} x3) + x2 {g1} (x1 {g1} x3)";
const char* const kNovRightComm = "(x1 {g1} x2) {g1} x3 - (x1 {g1} x3) {g1} x2";

QuadOperad textual(const std::string& name) {
  using B = GeneratorSpaceBuilder;
  if (name == "Com") return make_operad(name, B().add("m", Symmetry::Symmetric).build(), {kAssoc});
  if (name == "Lie")
    return make_operad(name, B().add("b", Symmetry::Antisymmetric).build(),
                       {"(x1 {b} x2) {b} x3 + (x2 {b} x3) {b} x1 + (x3 {b} x1) {b} x2"});
  if (name == "As") return make_operad(name, B().add_pair("m", "mop").build(), {kAssoc});
  if (name == "Pois")
    return make_operad(name, B().add("e1", Symmetry::Symmetric).add("e2", Symmetry::Antisymmetric).build(),
                       {"(x1 {e1} x2) {e1} x3 - x1 {e1} (x2 {e1} x3)",
                        "(x1 {e2} x2) {e2} x3 + (x2 {e2} x3) {e2} x1 + (x3 {e2} x1) {e2} x2",
                        "(x1 {e1} x2) {e2} x3 - (x1 {e2} x3) {e1} x2 - x1 {e1} (x2 {e2} x3)"});
  if (name == "Nov")
    return make_operad(name, B().add_pair("g1", "g2").build(), {kNovLeftSym, kNovRightComm});
  if (name == "NP")
    return make_operad(name, B().add("e1", Symmetry::Symmetric).add_pair("g1", "g2").build(),
                       {"(x1 {e1} x2) {e1} x3 - x1 {e1} (x2 {e1} x3)", kNovLeftSym, kNovRightComm,
                        "(x1 {e1} x2) {g1} x3 - x1 {e1} (x2 {g1} x3)",
                        "(x1 {g1} x2) {e1} x3 - x1 {g1} (x2 {e1} x3) - (x2 {g1} x1) {e1} x3 + x2 {g1} (x1 {e1} x3)"});
  if (name == "GD")
    return make_operad(name, B().add_pair("g1", "g2").add("e2", Symmetry::Antisymmetric).build(),
                       {"(x1 {e2} x2) {e2} x3 + (x2 {e2} x3) {e2} x1 + (x3 {e2} x1) {e2} x2", kNovLeftSym,
                        kNovRightComm,
                        "(x1 {g1} x2) {e2} x3 - (x1 {g1} x3) {e2} x2 + (x1 {e2} x2) {g1} x3"
                        " - (x1 {e2} x3) {g1} x2 + x1 {g1} (x3 {e2} x2)"});
  if (name == "Alt")
    return make_operad(name, B().add_pair("m", "mop").build(),
                       {"(x1 {m} x2) {m} x3 - x1 {m} (x2 {m} x3) + (x2 {m} x1) {m} x3 - x2 {m} (x1 {m} x3)",
                        "(x1 {m} x2) {m} x3 - x1 {m} (x2 {m} x3) + (x1 {m} x3) {m} x2 - x1 {m} (x3 {m} x2)"});
  if (name == "Perm")
    return make_operad(name, B().add_pair("m", "mop").build(),
                       {kAssoc, "(x1 {m} x2) {m} x3 - (x2 {m} x1) {m} x3"});
  if (name == "Zinb")
    return make_operad(name, B().add_pair("m", "mop").build(),
                       {"(x1 {m} x2) {m} x3 - x1 {m} (x2 {m} x3) - x1 {m} (x3 {m} x2)"});
  throw InputError("unknown catalog operad: " + name);
}

QuadOperad renamed(QuadOperad p, const std::string& name) {
  p.name = name;
  return p;
}

QuadOperad derived(const std::string& name) {
  if (name == "Leib") return renamed(white_product(catalog("Perm"), catalog("Lie")), name);
  if (name == "preLie") return renamed(dual_operad(catalog("Perm")), name);
  if (name == "diAs") {
    QuadOperad p = renamed(white_product(catalog("Perm"), catalog("As")), name);
    p.dictionary = {{"m*m", "⊢"}, {"mop*m", "⊣"}, {"m*mop", "⊢op"}, {"mop*mop", "⊣op"}};
    return p;
  }
  if (name == "preAs") return renamed(dual_operad(catalog("diAs")), name);
  if (name == "diNov") return renamed(white_product(catalog("Perm"), catalog("Nov")), name);
  if (name == "postLie") return renamed(split(catalog("Lie"), SplitMode::Post), name);
  if (name == "ComTriAs") return renamed(dual_operad(catalog("postLie")), name);
  throw InputError("unknown catalog operad: " + name);
}

std::mutex cache_mutex;
std::map<std::string, QuadOperad>& cache() {
  static std::map<std::string, QuadOperad> entries;
  return entries;
}

}  // namespace

const std::vector<std::string>& textual_catalog_names() {
  static const std::vector<std::string> names{"Com", "Lie", "As",  "Pois", "Nov",
                                              "NP",  "GD",  "Alt", "Perm", "Zinb"};
  return names;
}

const std::vector<std::string>& derived_catalog_names() {
  static const std::vector<std::string> names{"Leib",  "preLie",  "diAs",    "preAs",
                                              "diNov", "postLie", "ComTriAs"};
  return names;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out = textual_catalog_names();
  for (const auto& n : derived_catalog_names()) out.push_back(n);
  return out;
}

bool in_catalog(const std::string& name) {
  for (const auto& n : catalog_names())
    if (n == name) return true;
  return false;
}

QuadOperad catalog(const std::string& name) {
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache().find(name);
    if (it != cache().end()) return it->second;
  }
  bool is_textual = false;
  for (const auto& n : textual_catalog_names()) is_textual = is_textual || n == name;
  QuadOperad p = is_textual ? textual(name) : derived(name);
  std::lock_guard lock(cache_mutex);
  return cache().try_emplace(name, std::move(p)).first->second;
}

}  // namespace quadop
