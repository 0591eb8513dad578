#include "quadop/spec_file.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "quadop/catalog.hpp"
#include "quadop/errors.hpp"
#include "quadop/koszul.hpp"

namespace quadop {

namespace {

using nlohmann::json;

GeneratorSpace generators_from_json(const json& list) {
  if (!list.is_array()) throw InputError("spec: \"generators\" must be an array");
  std::vector<std::string> names;
  // Swap columns as name -> coefficient maps; resolved once all names are known.
  std::vector<std::map<std::string, Rational>> images;
  for (const auto& g : list) {
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string())
      throw InputError("spec: every generator needs a string \"name\"");
    const std::string name = g["name"];
    if (!g.contains("symmetry")) throw InputError("spec: generator " + name + " has no \"symmetry\"");
    const json& sym = g["symmetry"];
    if (sym == "sym") {
      names.push_back(name);
      images.push_back({{name, 1}});
    } else if (sym == "antisym") {
      names.push_back(name);
      images.push_back({{name, -1}});
    } else if (sym.is_object() && sym.contains("pair") && sym["pair"].is_string()) {
      const std::string other = sym["pair"];
      names.push_back(name);
      images.push_back({{other, 1}});
      names.push_back(other);
      images.push_back({{name, 1}});
    } else if (sym.is_object() && sym.contains("swap") && sym["swap"].is_object()) {
      std::map<std::string, Rational> image;
      for (const auto& [target, coef] : sym["swap"].items()) {
        if (!coef.is_string()) throw InputError("spec: swap coefficients must be strings");
        try {
          image[target] = parse_rational(coef.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw InputError("spec: bad rational \"" + coef.get<std::string>() + "\"");
        }
      }
      names.push_back(name);
      images.push_back(std::move(image));
    } else {
      throw InputError("spec: generator " + name + " has an unrecognized symmetry");
    }
  }
  MatrixQ swap(names.size(), names.size());
  for (std::size_t col = 0; col < names.size(); ++col)
    for (const auto& [target, coef] : images[col]) {
      auto it = std::find(names.begin(), names.end(), target);
      if (it == names.end()) throw InputError("spec: swap refers to unknown generator " + target);
      swap(static_cast<std::size_t>(it - names.begin()), col) = coef;
    }
  return GeneratorSpace(std::move(names), std::move(swap));
}

}  // namespace

QuadOperad operad_from_spec_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("spec: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("spec: top level must be an object");
  const std::string name = doc.value("name", std::string("unnamed"));
  const GeneratorSpace gens = generators_from_json(doc.value("generators", json::array()));
  std::vector<std::string> relations;
  for (const auto& r : doc.value("relations", json::array())) {
    if (!r.is_string()) throw InputError("spec: relations must be strings");
    relations.push_back(r);
  }
  return make_operad(name, gens, relations);
}

QuadOperad load_operad_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return operad_from_spec_json(buf.str());
}

QuadOperad resolve_operad(const std::string& name_or_path) {
  if (in_catalog(name_or_path)) return catalog(name_or_path);
  if (!name_or_path.empty() && name_or_path.back() == '!') {
    const std::string base = name_or_path.substr(0, name_or_path.size() - 1);
    if (in_catalog(base)) return dual_operad(catalog(base));
  }
  if (std::filesystem::is_regular_file(name_or_path)) return load_operad_spec(name_or_path);
  throw InputError("unknown operad (not a catalog name or a file): " + name_or_path);
}

}  // namespace quadop
