#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgdot/lganalysis.hpp"

namespace lgdot {

enum class OutputFormat { csv, json, svg };

std::string to_string(OutputFormat f);

// One simulation run as described by a flat key = value document with
// `dot.` and `run.` sections and `#` comments.
struct RunConfig {
  DotParameters dot;
  double t_max = 5000.0;  // ps
  long t_steps = 201;     // grid points including t = 0 and t_max
  std::string output_dir = ".";
  std::vector<OutputFormat> formats{OutputFormat::csv, OutputFormat::svg};
  std::optional<SweepAxis> sweep_axis;
  std::vector<double> sweep_values;

  std::vector<double> time_grid() const;
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

// Parses the documented key = value grammar. Unknown keys and
// out-of-range values are rejected with messages naming the key; every
// default applied for an omitted key is echoed to *diagnostics when given.
RunConfig parse_config(std::string_view text, std::ostream* diagnostics = nullptr);

// Canonical document that parses back to an identical RunConfig.
std::string serialize_config(const RunConfig& cfg);

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

}  // namespace lgdot
