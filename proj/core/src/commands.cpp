#include "lgdot/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "lgdot/svg.hpp"

namespace lgdot {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::optional<FigureId> parse_figure_id(const std::string& name) {
  if (name == "fig2") return FigureId::fig2;
  if (name == "fig3") return FigureId::fig3;
  if (name == "fig4") return FigureId::fig4;
  if (name == "fig5") return FigureId::fig5;
  return std::nullopt;
}

std::string to_string(FigureId id) {
  switch (id) {
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4: return "fig4";
    case FigureId::fig5: return "fig5";
  }
  return "unknown";
}

FigureSpec resolve_figure(FigureId id) {
  FigureSpec spec;
  spec.id = id;
  RunConfig& cfg = spec.config;
  cfg.formats = {OutputFormat::csv, OutputFormat::json, OutputFormat::svg};
  cfg.dot.gate_width = 50.0;
  cfg.dot.temperature = 5.0;
  switch (id) {
    case FigureId::fig2:
      cfg.dot.set_s_fss(3.0);
      cfg.dot.g_noise = 0.0;
      cfg.t_max = 5000.0;
      cfg.t_steps = 201;
      break;
    case FigureId::fig3:
      cfg.dot.g_noise = 0.3;
      cfg.sweep_axis = SweepAxis::s_fss;
      cfg.sweep_values = {0.5, 1.0, 2.0, 3.0, 5.0, 8.0};
      cfg.t_max = 5000.0;
      cfg.t_steps = 401;  // resolves the S = 8 ueV oscillation
      break;
    case FigureId::fig4:
      cfg.dot.set_s_fss(3.0);
      cfg.sweep_axis = SweepAxis::g_noise;
      cfg.sweep_values = {0.0, 0.1, 0.3, 0.6, 1.0};
      cfg.t_max = 5000.0;
      cfg.t_steps = 201;
      break;
    case FigureId::fig5:
      cfg.dot.set_s_fss(2.5);
      cfg.dot.g_noise = 0.2;
      cfg.sweep_axis = SweepAxis::temperature;
      cfg.sweep_values = {4.0, 10.0, 20.0, 40.0, 80.0};
      cfg.t_max = 5000.0;
      cfg.t_steps = 251;
      break;
  }
  cfg.validate();
  return spec;
}

namespace {

ordered_json config_json(const RunConfig& cfg) {
  ordered_json dot;
  dot["s_fss"] = cfg.dot.s_fss;
  dot["level_energies"] = cfg.dot.level_energies;
  dot["gamma_x"] = cfg.dot.gamma_x;
  dot["gamma_dephase0"] = cfg.dot.gamma_dephase0;
  dot["gamma_phonon"] = cfg.dot.gamma_phonon;
  dot["temperature"] = cfg.dot.temperature;
  dot["g_noise"] = cfg.dot.g_noise;
  dot["gate_width"] = cfg.dot.gate_width;
  if (cfg.dot.eta_override) dot["eta_override"] = *cfg.dot.eta_override;

  ordered_json run;
  run["t_max"] = cfg.t_max;
  run["t_steps"] = cfg.t_steps;
  run["output_dir"] = cfg.output_dir;
  ordered_json formats = ordered_json::array();
  for (OutputFormat f : cfg.formats) formats.push_back(to_string(f));
  run["formats"] = formats;
  if (cfg.sweep_axis) {
    run["sweep_axis"] = to_string(*cfg.sweep_axis);
    run["sweep_values"] = cfg.sweep_values;
  }

  ordered_json out;
  out["dot"] = dot;
  out["run"] = run;
  return out;
}

ordered_json point_json(const LGPoint& pt) {
  ordered_json j;
  j["t"] = pt.t;
  j["k_t"] = pt.k_t;
  j["k_2t"] = pt.k_2t;
  j["k_plus"] = pt.k_plus;
  j["k_minus"] = pt.k_minus;
  return j;
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << bytes;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

fs::path prepare_output_dir(const RunConfig& cfg, const std::string& out_override) {
  const fs::path dir = out_override.empty() ? fs::path(cfg.output_dir)
                                            : fs::path(out_override);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec && !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'");
  }
  return dir;
}

bool wants(const RunConfig& cfg, OutputFormat f) {
  return std::find(cfg.formats.begin(), cfg.formats.end(), f) != cfg.formats.end();
}

std::vector<LGPoint> evaluate_curve(const RunConfig& cfg) {
  const PairDynamics dyn(cfg.dot);
  std::vector<LGPoint> points;
  points.reserve(static_cast<size_t>(cfg.t_steps));
  for (double t : cfg.time_grid()) points.push_back(lg_point(dyn, t));
  return points;
}

void write_evolve_outputs(const RunConfig& cfg, const std::vector<LGPoint>& points,
                          const fs::path& dir, const std::string& prefix) {
  if (wants(cfg, OutputFormat::csv)) {
    write_file(dir / (prefix + ".csv"), evolve_csv(points));
  }
  if (wants(cfg, OutputFormat::json)) {
    write_file(dir / (prefix + ".json"), evolve_json(cfg, points));
  }
  if (wants(cfg, OutputFormat::svg)) {
    SvgSeries plus{"K+", {}}, minus{"K-", {}};
    for (const LGPoint& pt : points) {
      plus.points.emplace_back(pt.t, pt.k_plus);
      minus.points.emplace_back(pt.t, pt.k_minus);
    }
    SvgStyle style;
    style.title = prefix;
    style.y_label = "K";
    write_file(dir / (prefix + ".svg"), emit_svg({plus, minus}, style));
  }
}

void write_sweep_outputs(const RunConfig& cfg, const SweepResult& result,
                         const fs::path& dir, const std::string& prefix) {
  if (wants(cfg, OutputFormat::csv)) {
    for (size_t i = 0; i < result.axis_values.size(); ++i) {
      const std::string name = prefix + "_" + result.axis_name + "_" +
                               format_double(result.axis_values[i]) + ".csv";
      write_file(dir / name, evolve_csv(result.curves[i]));
    }
    write_file(dir / (prefix + "_summary.csv"), sweep_summary_csv(result));
  }
  if (wants(cfg, OutputFormat::json)) {
    write_file(dir / (prefix + ".json"), sweep_json(cfg, result));
  }
  if (wants(cfg, OutputFormat::svg)) {
    std::vector<SvgSeries> series;
    for (size_t i = 0; i < result.axis_values.size(); ++i) {
      SvgSeries s;
      s.label = result.axis_name + " = " + format_double(result.axis_values[i]);
      for (const LGPoint& pt : result.curves[i]) {
        s.points.emplace_back(pt.t, pt.k_minus);
      }
      series.push_back(std::move(s));
    }
    SvgStyle style;
    style.title = prefix;
    style.y_label = "K-";
    write_file(dir / (prefix + ".svg"), emit_svg(series, style));
  }
}

}  // namespace

std::string evolve_csv(const std::vector<LGPoint>& points) {
  std::string out = "t_ps,k_t,k_2t,k_plus,k_minus\n";
  for (const LGPoint& pt : points) {
    out += format_double(pt.t) + "," + format_double(pt.k_t) + "," +
           format_double(pt.k_2t) + "," + format_double(pt.k_plus) + "," +
           format_double(pt.k_minus) + "\n";
  }
  return out;
}

std::string evolve_json(const RunConfig& cfg, const std::vector<LGPoint>& points) {
  ordered_json j;
  j["config"] = config_json(cfg);
  ordered_json pts = ordered_json::array();
  for (const LGPoint& pt : points) pts.push_back(point_json(pt));
  j["points"] = pts;
  return j.dump(2) + "\n";
}

std::string sweep_summary_csv(const SweepResult& result) {
  std::string out = "axis_value,min_kminus,first_violation_t_ps\n";
  for (size_t i = 0; i < result.axis_values.size(); ++i) {
    out += format_double(result.axis_values[i]) + "," +
           format_double(result.min_kminus[i]) + ",";
    out += result.first_violation_t[i] ? format_double(*result.first_violation_t[i])
                                       : std::string("none");
    out += "\n";
  }
  return out;
}

std::string sweep_json(const RunConfig& cfg, const SweepResult& result) {
  ordered_json j;
  j["config"] = config_json(cfg);
  j["axis"] = result.axis_name;
  j["axis_values"] = result.axis_values;
  ordered_json curves = ordered_json::array();
  for (const auto& curve : result.curves) {
    ordered_json c = ordered_json::array();
    for (const LGPoint& pt : curve) c.push_back(point_json(pt));
    curves.push_back(std::move(c));
  }
  j["curves"] = curves;
  j["min_kminus"] = result.min_kminus;
  ordered_json firsts = ordered_json::array();
  for (const auto& f : result.first_violation_t) {
    if (f) firsts.push_back(*f); else firsts.push_back(nullptr);
  }
  j["first_violation_t_ps"] = firsts;
  return j.dump(2) + "\n";
}

int cmd_evolve(const RunConfig& cfg, const std::string& out_override) {
  cfg.validate();
  const fs::path dir = prepare_output_dir(cfg, out_override);
  write_evolve_outputs(cfg, evaluate_curve(cfg), dir, "evolve");
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& out_override) {
  cfg.validate();
  if (!cfg.sweep_axis) {
    throw InvalidInput("sweep requires run.sweep_axis and run.sweep_values");
  }
  const fs::path dir = prepare_output_dir(cfg, out_override);
  const SweepResult result =
      sweep(cfg.dot, *cfg.sweep_axis, cfg.sweep_values, cfg.time_grid());
  write_sweep_outputs(cfg, result, dir, "sweep");
  return 0;
}

int cmd_figure(FigureId id, const std::string& out_override) {
  const FigureSpec spec = resolve_figure(id);
  const fs::path dir = prepare_output_dir(spec.config, out_override);
  const std::string prefix = to_string(id);
  if (spec.config.sweep_axis) {
    const SweepResult result = sweep(spec.config.dot, *spec.config.sweep_axis,
                                     spec.config.sweep_values,
                                     spec.config.time_grid());
    write_sweep_outputs(spec.config, result, dir, prefix);
  } else {
    write_evolve_outputs(spec.config, evaluate_curve(spec.config), dir, prefix);
  }
  return 0;
}

int cmd_validate(const ValidateOptions& options, std::ostream& out) {
  const std::vector<CheckResult> checks = run_validation(options);
  bool all_passed = true;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
        << "\n";
    all_passed = all_passed && c.passed;
  }
  out << (all_passed ? "validation passed" : "validation FAILED") << " ("
      << checks.size() << " checks)\n";
  return all_passed ? 0 : 1;
}

}  // namespace lgdot
