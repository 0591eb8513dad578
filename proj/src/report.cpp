#include "quadop/report.hpp"

#include <sstream>

#include <json.hpp>

#include "quadop/errors.hpp"
#include "quadop/parser.hpp"

namespace quadop {

using nlohmann::json;

void to_json(json& j, const OperadDims& d) {
  j = json{{"gen", d.gen},     {"free3", d.free3},
           {"relations", d.relations}, {"p3", d.p3},
           {"dual_relations", d.dual_relations}, {"dual_p3", d.dual_p3}};
}
void from_json(const json& j, OperadDims& d) {
  j.at("gen").get_to(d.gen);
  j.at("free3").get_to(d.free3);
  j.at("relations").get_to(d.relations);
  j.at("p3").get_to(d.p3);
  j.at("dual_relations").get_to(d.dual_relations);
  j.at("dual_p3").get_to(d.dual_p3);
}

void to_json(json& j, const OperadSummary& s) {
  j = json{{"name", s.name},           {"recipe", s.recipe}, {"generators", s.generators},
           {"swap", s.swap},           {"dims", s.dims},     {"relations", s.relations},
           {"dictionary", s.dictionary}};
}
void from_json(const json& j, OperadSummary& s) {
  j.at("name").get_to(s.name);
  j.at("recipe").get_to(s.recipe);
  j.at("generators").get_to(s.generators);
  j.at("swap").get_to(s.swap);
  j.at("dims").get_to(s.dims);
  j.at("relations").get_to(s.relations);
  j.at("dictionary").get_to(s.dictionary);
}

void to_json(json& j, const WitnessText& w) { j = json{{"text", w.text}, {"pqt", w.pqt}}; }
void from_json(const json& j, WitnessText& w) {
  j.at("text").get_to(w.text);
  j.at("pqt").get_to(w.pqt);
}

void to_json(json& j, const DongSection& d) {
  j = json{{"verdict", d.verdict},
           {"kernel_dim", d.kernel_dim},
           {"method_agreement", d.method_agreement},
           {"witnesses", d.witnesses}};
}
void from_json(const json& j, DongSection& d) {
  j.at("verdict").get_to(d.verdict);
  j.at("kernel_dim").get_to(d.kernel_dim);
  j.at("method_agreement").get_to(d.method_agreement);
  j.at("witnesses").get_to(d.witnesses);
}

void to_json(json& j, const ProductSection& p) {
  j = json{{"kind", p.kind}, {"operands", p.operands}, {"dictionary", p.dictionary}, {"checks", p.checks}};
}
void from_json(const json& j, ProductSection& p) {
  j.at("kind").get_to(p.kind);
  j.at("operands").get_to(p.operands);
  j.at("dictionary").get_to(p.dictionary);
  j.at("checks").get_to(p.checks);
}

void to_json(json& j, const PairText& p) {
  j = json{{"inner", p.inner}, {"outer", p.outer}, {"order", p.order ? json(*p.order) : json(nullptr)}};
}
void from_json(const json& j, PairText& p) {
  j.at("inner").get_to(p.inner);
  j.at("outer").get_to(p.outer);
  p.order = j.at("order").is_null() ? std::nullopt : std::optional<int>(j.at("order").get<int>());
}

void to_json(json& j, const LocalitySection& l) {
  j = json{{"window", l.window}, {"n_max", l.n_max}, {"k", l.k},
           {"n", l.n},           {"m", l.m},         {"pairs", l.pairs},
           {"all_local", l.all_local}, {"note", l.note}};
}
void from_json(const json& j, LocalitySection& l) {
  j.at("window").get_to(l.window);
  j.at("n_max").get_to(l.n_max);
  j.at("k").get_to(l.k);
  j.at("n").get_to(l.n);
  j.at("m").get_to(l.m);
  j.at("pairs").get_to(l.pairs);
  j.at("all_local").get_to(l.all_local);
  j.at("note").get_to(l.note);
}

OperadSummary summarize(const QuadOperad& p) {
  OperadSummary s;
  s.name = p.name;
  s.recipe = p.recipe;
  s.generators = p.gens.names();
  for (std::size_t r = 0; r < p.d(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < p.d(); ++c) row.push_back(to_string(p.gens.swap()(r, c)));
    s.swap.push_back(std::move(row));
  }
  s.dims = dims_of(p);
  for (std::size_t r = 0; r < p.relations.dim(); ++r)
    s.relations.push_back(pretty_print(p.relations.basis().row(r), p.gens));
  s.dictionary = p.dictionary;
  return s;
}

DongSection dong_section(const DongReport& r) {
  DongSection d;
  d.verdict = to_string(r.verdict);
  d.kernel_dim = r.kernel_dim;
  d.method_agreement = r.method_agreement;
  for (const auto& w : r.witnesses) d.witnesses.push_back({w.text, w.pqt});
  return d;
}

LocalitySection locality_section(const LocalitySweep& sweep, const QuadOperad& p) {
  LocalitySection l;
  l.window = sweep.window;
  l.n_max = sweep.n_max;
  l.k = sweep.k;
  l.n = sweep.n;
  l.m = sweep.m;
  for (const auto& o : sweep.pairs) l.pairs.push_back({p.gens.name(o.inner), p.gens.name(o.outer), o.order});
  l.all_local = sweep.all_local();
  l.note = "found orders are exact ideal memberships; 'none' only means no N <= n_max inside the window";
  return l;
}

std::string emit_json(const Report& r) {
  json j{{"schema_version", r.schema_version}, {"operad", r.operad}};
  if (r.dong) j["dong"] = *r.dong;
  if (r.dual) j["dual"] = *r.dual;
  if (r.product) j["product"] = *r.product;
  if (r.locality) j["locality"] = *r.locality;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    j.at("schema_version").get_to(r.schema_version);
    j.at("operad").get_to(r.operad);
    if (j.contains("dong")) r.dong = j["dong"].get<DongSection>();
    if (j.contains("dual")) r.dual = j["dual"].get<OperadSummary>();
    if (j.contains("product")) r.product = j["product"].get<ProductSection>();
    if (j.contains("locality")) r.locality = j["locality"].get<LocalitySection>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

namespace {

void dims_line(std::ostream& out, const OperadDims& d) {
  out << "  dims: gen " << d.gen << ", free3 " << d.free3 << ", relations " << d.relations << ", p3 "
      << d.p3 << ", dual_relations " << d.dual_relations << ", dual_p3 " << d.dual_p3 << "\n";
}

void summary_block(std::ostream& out, const OperadSummary& s, bool with_relations) {
  out << s.name;
  if (!s.recipe.empty()) out << " = " << s.recipe;
  out << "\n  generators:";
  for (const auto& g : s.generators) out << " " << g;
  out << "\n";
  dims_line(out, s.dims);
  for (const auto& [k, v] : s.dictionary) out << "  " << k << " ~ " << v << "\n";
  if (with_relations)
    for (const auto& rel : s.relations) out << "  " << rel << " = 0\n";
}

}  // namespace

std::string emit_text(const Report& r) {
  std::ostringstream out;
  const bool brief = r.dong && !r.dual && !r.product && !r.locality;
  if (brief) {
    out << r.operad.name << ": " << r.dong->verdict << "\n";
    dims_line(out, r.operad.dims);
  } else {
    summary_block(out, r.operad, !r.dual && !r.locality);
  }
  if (r.dong) {
    if (!brief) out << "dong: " << r.dong->verdict << "\n";
    if (r.dong->kernel_dim > 0) {
      out << "  kernel of V^ (x) V^ -> P!(3) has dimension " << r.dong->kernel_dim << ":\n";
      for (const auto& w : r.dong->witnesses) out << "    " << w.pqt << "\n";
    }
  }
  if (r.dual) {
    out << "dual: ";
    summary_block(out, *r.dual, true);
  }
  if (r.product) {
    out << "product: " << r.product->kind << "(";
    for (std::size_t i = 0; i < r.product->operands.size(); ++i)
      out << (i ? ", " : "") << r.product->operands[i];
    out << ")\n";
    for (const auto& [name, ok] : r.product->checks) out << "  check " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
  }
  if (r.locality) {
    const auto& l = *r.locality;
    out << "locality: K = " << l.window << ", N <= " << l.n_max << ", k = " << l.k << ", anchor (" << l.n << ", "
        << l.m << ")\n";
    for (const auto& p : l.pairs)
      out << "  (a {" << p.inner << "}_(" << l.k << ") b, c) under {" << p.outer << "}: "
          << (p.order ? "local, N = " + std::to_string(*p.order) : std::string("none found")) << "\n";
    out << "  " << (l.all_local ? "all pairs local" : "some pairs not local in the window") << "\n";
    out << "  note: " << l.note << "\n";
  }
  return out.str();
}

}  // namespace quadop
