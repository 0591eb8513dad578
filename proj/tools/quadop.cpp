// quadop: Dong Property, Koszul duals and Manin products of binary quadratic operads.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadop/catalog.hpp"
#include "quadop/dong.hpp"
#include "quadop/errors.hpp"
#include "quadop/koszul.hpp"
#include "quadop/locality.hpp"
#include "quadop/manin.hpp"
#include "quadop/report.hpp"
#include "quadop/selfcheck.hpp"
#include "quadop/spec_file.hpp"

using namespace quadop;

namespace {

struct Options {
  bool json = false;
  std::string operad;
  std::vector<std::string> operands;
  std::string product_kind;
  int k = 0;
  int n_max = 4;
  int window = 6;
  std::string anchor = "0,0";
};

void print(const Report& r, const Options& opt) { std::cout << (opt.json ? emit_json(r) : emit_text(r)); }

int cmd_catalog(const Options& opt) {
  nlohmann::json entries = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& name : catalog_names()) {
    const QuadOperad p = catalog(name);
    const DongReport d = dong_verdict(p);
    const OperadDims dims = dims_of(p);
    entries.push_back({{"name", name},
                       {"recipe", p.recipe},
                       {"dims", {{"gen", dims.gen}, {"free3", dims.free3}, {"relations", dims.relations},
                                 {"p3", dims.p3}, {"dual_relations", dims.dual_relations},
                                 {"dual_p3", dims.dual_p3}}},
                       {"dong", to_string(d.verdict)}});
    text << name << "  d=" << dims.gen << " dimR=" << dims.relations << " dimP(3)=" << dims.p3 << "  "
         << to_string(d.verdict);
    if (!p.recipe.empty()) text << "  [" << p.recipe << "]";
    text << "\n";
  }
  if (opt.json)
    std::cout << nlohmann::json{{"schema_version", kSchemaVersion}, {"catalog", entries}}.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

int cmd_show(const Options& opt) {
  Report r;
  r.operad = summarize(resolve_operad(opt.operad));
  print(r, opt);
  return 0;
}

int cmd_dual(const Options& opt) {
  const QuadOperad p = resolve_operad(opt.operad);
  Report r;
  r.operad = summarize(p);
  r.dual = summarize(dual_operad(p));
  print(r, opt);
  return 0;
}

int cmd_dong(const Options& opt) {
  const QuadOperad p = resolve_operad(opt.operad);
  Report r;
  r.operad = summarize(p);
  r.dong = dong_section(dong_verdict(p));
  print(r, opt);
  return 0;
}

std::map<std::string, std::string> origin_dictionary(const QuadOperad& result, const std::string& kind) {
  std::map<std::string, std::string> out;
  for (const auto& g : result.gens.names()) {
    if (kind == "black") {
      const auto dot = g.find("•");
      out[g] = "k- (x) " + g.substr(0, dot) + " (x) " + g.substr(dot + std::string("•").size());
    } else if (kind == "pre" || kind == "post") {
      const auto us = g.find('_');
      const std::string part = g.substr(0, us);
      out[g] = (part == "succ" ? "≻ " : part == "prec" ? "≺ " : "⊥ ") + g.substr(us + 1);
    } else {
      const auto star = g.find('*');
      out[g] = g.substr(0, star) + " (x) " + g.substr(star + 1);
    }
  }
  return out;
}

int cmd_product(const Options& opt) {
  const std::string& kind = opt.product_kind;
  const bool binary = kind == "white" || kind == "black";
  if (opt.operands.size() != (binary ? 2u : 1u))
    throw InputError("product --" + kind + " takes " + (binary ? "two operands" : "one operand"));
  std::vector<QuadOperad> ops;
  for (const auto& o : opt.operands) ops.push_back(resolve_operad(o));

  ProductSection section;
  section.kind = kind;
  section.operands = opt.operands;
  QuadOperad result;
  if (kind == "white") {
    result = white_product(ops[0], ops[1]);
  } else if (kind == "black") {
    result = black_product(ops[0], ops[1]);
    const QuadOperad direct = black_direct(ops[0], ops[1]);
    section.checks["black_direct"] = direct.relations == result.relations;
    section.checks["tensor_characterization"] = verify_black_tensor(ops[0], ops[1], result).pass;
  } else if (kind == "di" || kind == "tri") {
    result = replicate(ops[0], kind == "di" ? ReplicationMode::Di : ReplicationMode::Tri);
  } else {
    result = split(ops[0], kind == "pre" ? SplitMode::Pre : SplitMode::Post);
  }
  section.dictionary = origin_dictionary(result, kind);

  Report r;
  r.operad = summarize(result);
  r.dong = dong_section(dong_verdict(result));
  r.product = section;
  print(r, opt);
  for (const auto& [name, ok] : section.checks)
    if (!ok) throw InvariantError("product check failed: " + name);
  return 0;
}

int cmd_locality(const Options& opt) {
  int n = 0, m = 0;
  char comma = 0;
  std::istringstream anchor(opt.anchor);
  if (!(anchor >> n >> comma >> m) || comma != ',') throw InputError("--anchor expects n,m");
  const QuadOperad p = resolve_operad(opt.operad);
  const LocalityInstance inst(p, opt.window);
  Report r;
  r.operad = summarize(p);
  r.dong = dong_section(dong_verdict(p));
  r.locality = locality_section(locality_sweep(inst, opt.n_max, opt.k, n, m), p);
  print(r, opt);
  return 0;
}

int cmd_selfcheck(const Options& opt) {
  const auto results = run_selfcheck();
  bool ok = true;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : results) {
    ok = ok && c.pass;
    list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!opt.json) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << (c.pass ? "" : ": " + c.detail) << "\n";
  }
  if (opt.json)
    std::cout << nlohmann::json{{"schema_version", kSchemaVersion}, {"selfcheck", list}, {"pass", ok}}.dump(2)
              << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dong Property and Manin products for binary quadratic operads"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "JSON output");

  auto with_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "JSON output"); };
  auto with_operad = [&](CLI::App* sub) {
    sub->add_option("operad", opt.operad, "catalog name, NAME! for its dual, or spec file")->required();
  };

  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in operads");
  auto* show_cmd = app.add_subcommand("show", "generators, dimensions and relations");
  auto* dual_cmd = app.add_subcommand("dual", "Koszul dual operad");
  auto* dong_cmd = app.add_subcommand("dong", "decide the Dong Property");
  auto* product_cmd = app.add_subcommand("product", "white/black products, replication, splitting");
  auto* locality_cmd = app.add_subcommand("locality", "windowed locality experiment");
  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run invariant suites");
  for (auto* sub : {catalog_cmd, show_cmd, dual_cmd, dong_cmd, product_cmd, locality_cmd, selfcheck_cmd})
    with_json(sub);
  for (auto* sub : {show_cmd, dual_cmd, dong_cmd, locality_cmd}) with_operad(sub);

  auto* kinds = product_cmd->add_option_group("kind");
  for (const char* k : {"white", "black", "di", "tri", "pre", "post"})
    kinds->add_flag_callback(std::string("--") + k, [&opt, k] { opt.product_kind = k; });
  kinds->require_option(1);
  product_cmd->add_option("operands", opt.operands, "one or two operads")->required();

  locality_cmd->add_option("--k", opt.k, "n-product order")->check(CLI::NonNegativeNumber);
  locality_cmd->add_option("--n-max", opt.n_max, "largest locality order tried")->check(CLI::NonNegativeNumber);
  locality_cmd->add_option("--window", opt.window, "index window radius K")->check(CLI::PositiveNumber);
  locality_cmd->add_option("--anchor", opt.anchor, "coefficient anchor n,m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(opt);
    if (*show_cmd) return cmd_show(opt);
    if (*dual_cmd) return cmd_dual(opt);
    if (*dong_cmd) return cmd_dong(opt);
    if (*product_cmd) return cmd_product(opt);
    if (*locality_cmd) return cmd_locality(opt);
    if (*selfcheck_cmd) return cmd_selfcheck(opt);
  } catch (const InputError& e) {
    std::cerr << "quadop: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "quadop: internal invariant violated: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
