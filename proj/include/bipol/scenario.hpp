#pragma once

#include <map>
#include <string>
#include <vector>

#include "bipol/model.hpp"

namespace bipol {

// One sweep axis: a parameter name and the values it takes.
struct SweepAxis {
  std::string parameter;
  std::vector<double> values;
};

// Scenario file contents: model parameters in the G/a unit system plus sweep
// axes, command options, and output settings.
struct Scenario {
  int schema = 1;
  std::string energy_unit = "G";
  std::string length_unit = "a";
  ModelParams model;
  std::vector<SweepAxis> sweep;
  std::string out_dir = "out";
  std::vector<std::string> emit_formats{"csv"};
  int threads = 0; // 0 -> BIPOL_THREADS or hardware
  std::map<std::string, double> options;

  bool operator==(const Scenario& other) const;
};

Scenario default_scenario();

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);
std::string emit_scenario(const Scenario& s);

// Apply one swept parameter value; throws config_error on unknown names.
ModelParams apply_parameter(const ModelParams& base, const std::string& name, double value);

PotentialKind potential_from_string(const std::string& s);
std::string to_string(PotentialKind k);

} // namespace bipol
