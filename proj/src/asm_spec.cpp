#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lcr/assemblies.hpp"

namespace lcr {

namespace {

using nlohmann::json;

Assembly assembly_from_json(const json& j, const std::string& name) {
  if (!j.is_object()) throw SpecError(name + ": assembly must be a JSON object");
  Assembly a;
  a.name = j.value("name", name);
  std::string flavor = j.value("flavor", "");
  if (flavor == "linear")
    a.flavor = Flavor::Linear;
  else if (flavor == "cartesian")
    a.flavor = Flavor::Cartesian;
  else
    throw SpecError(a.name + ": flavor must be \"linear\" or \"cartesian\"");
  if (!j.contains("carrier") || !j["carrier"].is_array())
    throw SpecError(a.name + ": carrier must be an array of labels");
  for (const auto& e : j["carrier"]) {
    if (!e.is_string()) throw SpecError(a.name + ": carrier labels must be strings");
    a.carrier.push_back(e.get<std::string>());
  }
  if (!j.contains("realizers") || !j["realizers"].is_object())
    throw SpecError(a.name + ": realizers must be an object");
  for (const auto& [label, terms] : j["realizers"].items()) {
    if (!terms.is_array()) throw SpecError(a.name + ": realizers of " + label + " must be a list");
    auto& rs = a.realizers[label];
    for (const auto& t : terms) {
      if (!t.is_string()) throw SpecError(a.name + ": realizer terms must be strings");
      try {
        rs.push_back(parse_comb(t.get<std::string>()));
      } catch (const CombParseError& e) {
        throw SpecError(a.name + ": realizer of " + label + ": " + e.what());
      }
    }
  }
  try {
    a.validate();
  } catch (const AssemblyError& e) {
    throw SpecError(e.what());
  }
  return a;
}

}  // namespace

ModelSpec parse_model_spec(const std::string& json_text, const std::string& name) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(name + ": " + e.what());
  }
  ModelSpec spec;
  spec.path = name;
  if (j.is_object() && j.contains("base")) {
    FamAssembly fam;
    fam.name = j.value("name", name);
    fam.base = assembly_from_json(j["base"], fam.name + ".base");
    if (!j.contains("fibers") || !j["fibers"].is_object())
      throw SpecError(fam.name + ": fibers must be an object");
    for (const auto& [label, fib] : j["fibers"].items())
      fam.fibers.emplace(label, assembly_from_json(fib, fam.name + "." + label));
    try {
      fam.validate();
    } catch (const AssemblyError& e) {
      throw SpecError(e.what());
    }
    spec.family = std::move(fam);
  } else {
    spec.assembly = assembly_from_json(j, name);
  }
  return spec;
}

ModelSpec load_model_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model_spec(ss.str(), std::filesystem::path(path).stem().string());
}

}  // namespace lcr
