#include "lgdot/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace lgdot {

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::svg: return "svg";
  }
  return "unknown";
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<double> RunConfig::time_grid() const {
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(t_steps));
  for (long i = 0; i < t_steps; ++i) {
    grid.push_back(t_max * static_cast<double>(i) / static_cast<double>(t_steps - 1));
  }
  return grid;
}

void RunConfig::validate() const {
  dot.validate();
  if (!(t_max > 0.0)) throw InvalidInput("run.t_max must be > 0");
  if (t_steps < 2) throw InvalidInput("run.t_steps must be >= 2");
  if (formats.empty()) throw InvalidInput("run.formats must not be empty");
  if (sweep_axis && sweep_values.empty()) {
    throw InvalidInput("run.sweep_axis is set but run.sweep_values is empty");
  }
  if (!sweep_axis && !sweep_values.empty()) {
    throw InvalidInput("run.sweep_values is set but run.sweep_axis is missing");
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

double parse_number(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  double out = 0.0;
  const char* first = v.data();
  const char* last = v.data() + v.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(out)) {
    throw InvalidInput("config value for '" + key + "' is not a finite number: '" + value + "'");
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  std::istringstream in(value);
  while (std::getline(in, current, ',')) items.push_back(trim(current));
  return items;
}

std::vector<double> parse_number_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const std::string& item : split_csv(value)) out.push_back(parse_number(key, item));
  if (out.empty()) throw InvalidInput("config value for '" + key + "' is an empty list");
  return out;
}

void require_range(const std::string& key, double v, bool ok, const char* valid) {
  if (!ok) {
    std::ostringstream os;
    os << "config value out of range: " << key << " = " << format_double(v)
       << " (valid: " << valid << ")";
    throw InvalidInput(os.str());
  }
}

const char* const kKnownKeys[] = {
    "dot.s_fss",      "dot.level_energies", "dot.gamma_x",
    "dot.gamma_dephase0", "dot.gamma_phonon", "dot.temperature",
    "dot.g_noise",    "dot.gate_width",     "dot.eta_override",
    "run.t_max",      "run.t_steps",        "run.output_dir",
    "run.formats",    "run.sweep_axis",     "run.sweep_values",
};

}  // namespace

RunConfig parse_config(std::string_view text, std::ostream* diagnostics) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "config line " << line_no << " is not of the form key = value: '" << stripped << "'";
      throw InvalidInput(os.str());
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (std::find_if(std::begin(kKnownKeys), std::end(kKnownKeys),
                     [&key](const char* k) { return key == k; }) == std::end(kKnownKeys)) {
      throw InvalidInput("unknown config key '" + key + "'");
    }
    if (kv.count(key)) throw InvalidInput("duplicate config key '" + key + "'");
    kv[key] = value;
  }

  RunConfig cfg;
  const bool has_s = kv.count("dot.s_fss") > 0;

  auto take = [&kv](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto echo_default = [diagnostics](const std::string& key, const std::string& value) {
    if (diagnostics) *diagnostics << "default applied: " << key << " = " << value << "\n";
  };
  auto number = [&](const char* key, double fallback, auto ok, const char* valid) {
    if (auto v = take(key)) {
      const double x = parse_number(key, *v);
      require_range(key, x, ok(x), valid);
      return x;
    }
    echo_default(key, format_double(fallback));
    return fallback;
  };

  cfg.dot.s_fss = number("dot.s_fss", cfg.dot.s_fss,
                         [](double x) { return x >= 0.0; }, ">= 0");
  cfg.dot.gamma_x = number("dot.gamma_x", cfg.dot.gamma_x,
                           [](double x) { return x > 0.0; }, "> 0");
  cfg.dot.gamma_dephase0 = number("dot.gamma_dephase0", cfg.dot.gamma_dephase0,
                                  [](double x) { return x >= 0.0; }, ">= 0");
  cfg.dot.gamma_phonon = number("dot.gamma_phonon", cfg.dot.gamma_phonon,
                                [](double x) { return x >= 0.0; }, ">= 0");
  cfg.dot.temperature = number("dot.temperature", cfg.dot.temperature,
                               [](double x) { return x > 0.0; }, "> 0");
  cfg.dot.g_noise = number("dot.g_noise", cfg.dot.g_noise,
                           [](double x) { return x >= 0.0; }, ">= 0");
  cfg.dot.gate_width = number("dot.gate_width", cfg.dot.gate_width,
                              [](double x) { return x >= 0.0; }, ">= 0");

  if (auto v = take("dot.eta_override")) {
    const double x = parse_number("dot.eta_override", *v);
    require_range("dot.eta_override", x, x >= 0.0 && x <= 1.0, "[0, 1]");
    cfg.dot.eta_override = x;
  }

  if (auto v = take("dot.level_energies")) {
    const std::vector<double> e = parse_number_list("dot.level_energies", *v);
    if (e.size() != 4) {
      throw InvalidInput("dot.level_energies must list exactly 4 energies");
    }
    std::copy(e.begin(), e.end(), cfg.dot.level_energies.begin());
    const double diff = cfg.dot.level_energies[2] - cfg.dot.level_energies[1];
    if (!has_s) {
      require_range("dot.level_energies", diff, diff >= 0.0,
                    "energies[2] - energies[1] >= 0");
      cfg.dot.s_fss = diff;
    } else if (std::abs(diff - cfg.dot.s_fss) > 1e-9) {
      throw InvalidInput(
          "dot.level_energies[2] - dot.level_energies[1] must equal dot.s_fss");
    }
  } else {
    // Keep the housed level energies consistent with the splitting.
    cfg.dot.level_energies = {0.0, 0.0, cfg.dot.s_fss, 0.0};
    if (!has_s) {
      echo_default("dot.level_energies", "0,0," + format_double(cfg.dot.s_fss) + ",0");
    }
  }

  cfg.t_max = number("run.t_max", cfg.t_max, [](double x) { return x > 0.0; }, "> 0");
  if (auto v = take("run.t_steps")) {
    const double x = parse_number("run.t_steps", *v);
    require_range("run.t_steps", x, x >= 2.0 && x == std::floor(x) && x <= 1e7,
                  "integer >= 2");
    cfg.t_steps = static_cast<long>(x);
  } else {
    echo_default("run.t_steps", std::to_string(cfg.t_steps));
  }

  if (auto v = take("run.output_dir")) {
    if (v->empty()) throw InvalidInput("run.output_dir must not be empty");
    cfg.output_dir = *v;
  } else {
    echo_default("run.output_dir", cfg.output_dir);
  }

  if (auto v = take("run.formats")) {
    std::vector<OutputFormat> formats;
    for (const std::string& item : split_csv(*v)) {
      if (item == "csv") formats.push_back(OutputFormat::csv);
      else if (item == "json") formats.push_back(OutputFormat::json);
      else if (item == "svg") formats.push_back(OutputFormat::svg);
      else throw InvalidInput("run.formats entry '" + item + "' is not one of csv, json, svg");
    }
    std::sort(formats.begin(), formats.end());
    formats.erase(std::unique(formats.begin(), formats.end()), formats.end());
    if (formats.empty()) throw InvalidInput("run.formats must not be empty");
    cfg.formats = formats;
  } else {
    echo_default("run.formats", "csv,svg");
  }

  if (auto v = take("run.sweep_axis")) {
    const auto axis = parse_sweep_axis(*v);
    if (!axis) {
      throw InvalidInput("run.sweep_axis '" + *v +
                         "' is not one of s_fss, g_noise, temperature, gate_width");
    }
    cfg.sweep_axis = *axis;
  }
  if (auto v = take("run.sweep_values")) {
    cfg.sweep_values = parse_number_list("run.sweep_values", *v);
  }

  cfg.validate();
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "dot.s_fss = " << format_double(cfg.dot.s_fss) << "\n";
  os << "dot.level_energies = " << format_double(cfg.dot.level_energies[0]) << ","
     << format_double(cfg.dot.level_energies[1]) << ","
     << format_double(cfg.dot.level_energies[2]) << ","
     << format_double(cfg.dot.level_energies[3]) << "\n";
  os << "dot.gamma_x = " << format_double(cfg.dot.gamma_x) << "\n";
  os << "dot.gamma_dephase0 = " << format_double(cfg.dot.gamma_dephase0) << "\n";
  os << "dot.gamma_phonon = " << format_double(cfg.dot.gamma_phonon) << "\n";
  os << "dot.temperature = " << format_double(cfg.dot.temperature) << "\n";
  os << "dot.g_noise = " << format_double(cfg.dot.g_noise) << "\n";
  os << "dot.gate_width = " << format_double(cfg.dot.gate_width) << "\n";
  if (cfg.dot.eta_override) {
    os << "dot.eta_override = " << format_double(*cfg.dot.eta_override) << "\n";
  }
  os << "run.t_max = " << format_double(cfg.t_max) << "\n";
  os << "run.t_steps = " << cfg.t_steps << "\n";
  os << "run.output_dir = " << cfg.output_dir << "\n";
  os << "run.formats = ";
  for (size_t i = 0; i < cfg.formats.size(); ++i) {
    os << (i ? "," : "") << to_string(cfg.formats[i]);
  }
  os << "\n";
  if (cfg.sweep_axis) {
    os << "run.sweep_axis = " << to_string(*cfg.sweep_axis) << "\n";
    os << "run.sweep_values = ";
    for (size_t i = 0; i < cfg.sweep_values.size(); ++i) {
      os << (i ? "," : "") << format_double(cfg.sweep_values[i]);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace lgdot
