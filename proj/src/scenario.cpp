#include "bipol/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace bipol {

using nlohmann::json;

PotentialKind potential_from_string(const std::string& s) {
  if (s == "none") return PotentialKind::None;
  if (s == "nna") return PotentialKind::NNA;
  if (s == "vdw") return PotentialKind::VdW;
  throw config_error("unknown potential kind: " + s);
}

std::string to_string(PotentialKind k) {
  switch (k) {
    case PotentialKind::None: return "none";
    case PotentialKind::NNA: return "nna";
    case PotentialKind::VdW: return "vdw";
  }
  return "?";
}

bool Scenario::operator==(const Scenario& other) const {
  auto model_eq = [](const ModelParams& a, const ModelParams& b) {
    return a.n_sites == b.n_sites && a.lattice_const == b.lattice_const && a.e0 == b.e0 &&
           a.hop_t == b.hop_t && a.coupling_G == b.coupling_G && a.detuning == b.detuning &&
           a.c_hbar == b.c_hbar && a.blockade_cells == b.blockade_cells &&
           a.d_strength == b.d_strength && a.potential_kind == b.potential_kind &&
           a.k_total_index == b.k_total_index;
  };
  if (!model_eq(model, other.model)) return false;
  if (sweep.size() != other.sweep.size()) return false;
  for (size_t i = 0; i < sweep.size(); ++i)
    if (sweep[i].parameter != other.sweep[i].parameter || sweep[i].values != other.sweep[i].values)
      return false;
  return schema == other.schema && energy_unit == other.energy_unit &&
         length_unit == other.length_unit && out_dir == other.out_dir &&
         emit_formats == other.emit_formats && threads == other.threads && options == other.options;
}

Scenario default_scenario() {
  Scenario s;
  s.model = derive_params(ModelParams{});
  return s;
}

static const char* const kParameterNames[] = {
    "n_sites", "lattice_const", "e0",          "hop_t",        "coupling_G",
    "detuning", "c_hbar",       "blockade_cells", "d_strength", "k_total_index"};

ModelParams apply_parameter(const ModelParams& base, const std::string& name, double value) {
  ModelParams p = base;
  if (name == "n_sites") {
    p.n_sites = static_cast<int>(value);
  } else if (name == "lattice_const") {
    p.lattice_const = value;
  } else if (name == "e0") {
    p.e0 = value;
  } else if (name == "hop_t") {
    p.hop_t = value;
  } else if (name == "coupling_G") {
    p.coupling_G = value;
  } else if (name == "detuning") {
    p.detuning = value;
  } else if (name == "c_hbar") {
    p.c_hbar = value;
  } else if (name == "blockade_cells") {
    p.blockade_cells = static_cast<int>(value);
    p.exclusion_halfwidth = -1;
  } else if (name == "d_strength") {
    p.d_strength = value;
  } else if (name == "k_total_index") {
    p.k_total_index = static_cast<int>(value);
  } else {
    throw config_error("unknown sweep parameter: " + name);
  }
  return derive_params(p);
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("scenario parse error: ") + e.what());
  }
  Scenario s;
  s.schema = j.value("schema", 1);
  if (j.contains("units")) {
    s.energy_unit = j["units"].value("energy", "G");
    s.length_unit = j["units"].value("length", "a");
  }
  if (s.energy_unit != "G" || s.length_unit != "a")
    throw config_error("units block must declare energy=G, length=a");

  ModelParams p;
  if (j.contains("model")) {
    const auto& m = j["model"];
    p.n_sites = m.value("n_sites", p.n_sites);
    p.lattice_const = m.value("lattice_const", p.lattice_const);
    p.e0 = m.value("e0", p.e0);
    p.hop_t = m.value("hop_t", p.hop_t);
    p.coupling_G = m.value("coupling_G", p.coupling_G);
    p.detuning = m.value("detuning", p.detuning);
    p.c_hbar = m.value("c_hbar", p.c_hbar);
    p.blockade_cells = m.value("blockade_cells", p.blockade_cells);
    p.d_strength = m.value("d_strength", p.d_strength);
    if (m.contains("potential")) p.potential_kind = potential_from_string(m["potential"]);
    p.k_total_index = m.value("k_total_index", p.k_total_index);
    if (m.contains("exclusion_halfwidth")) p.exclusion_halfwidth = m["exclusion_halfwidth"];
  }
  s.model = derive_params(p);

  if (j.contains("sweep")) {
    for (const auto& axis : j["sweep"]) {
      SweepAxis sa;
      sa.parameter = axis.at("parameter");
      for (const auto& v : axis.at("values")) sa.values.push_back(v.get<double>());
      if (sa.values.empty()) throw config_error("sweep axis has no values: " + sa.parameter);
      bool known = false;
      for (const char* name : kParameterNames) known |= sa.parameter == name;
      if (!known) throw config_error("sweep axis references unknown parameter: " + sa.parameter);
      s.sweep.push_back(std::move(sa));
    }
  }
  if (j.contains("output")) {
    s.out_dir = j["output"].value("dir", s.out_dir);
    if (j["output"].contains("formats"))
      s.emit_formats = j["output"]["formats"].get<std::vector<std::string>>();
  }
  s.threads = j.value("threads", 0);
  if (j.contains("options"))
    for (const auto& [key, val] : j["options"].items()) s.options[key] = val.get<double>();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string emit_scenario(const Scenario& s) {
  json j;
  j["schema"] = s.schema;
  j["units"] = {{"energy", s.energy_unit}, {"length", s.length_unit}};
  json m;
  m["n_sites"] = s.model.n_sites;
  m["lattice_const"] = s.model.lattice_const;
  m["e0"] = s.model.e0;
  m["hop_t"] = s.model.hop_t;
  m["coupling_G"] = s.model.coupling_G;
  m["detuning"] = s.model.detuning;
  m["c_hbar"] = s.model.c_hbar;
  m["blockade_cells"] = s.model.blockade_cells;
  m["d_strength"] = s.model.d_strength;
  m["potential"] = to_string(s.model.potential_kind);
  m["k_total_index"] = s.model.k_total_index;
  if (s.model.exclusion_halfwidth >= 0) m["exclusion_halfwidth"] = s.model.exclusion_halfwidth;
  j["model"] = m;
  if (!s.sweep.empty()) {
    json axes = json::array();
    for (const auto& axis : s.sweep)
      axes.push_back({{"parameter", axis.parameter}, {"values", axis.values}});
    j["sweep"] = axes;
  }
  j["output"] = {{"dir", s.out_dir}, {"formats", s.emit_formats}};
  j["threads"] = s.threads;
  if (!s.options.empty()) j["options"] = s.options;
  return j.dump(2) + "\n";
}

} // namespace bipol
