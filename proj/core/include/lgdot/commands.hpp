#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lgdot/config.hpp"
#include "lgdot/validate.hpp"

namespace lgdot {

enum class FigureId { fig2, fig3, fig4, fig5 };

std::optional<FigureId> parse_figure_id(const std::string& name);
std::string to_string(FigureId id);

// A figure command resolved to a concrete run: fig2 is a time evolution
// at S = 3 ueV, g = 0, omega = 50 ps, T = 5 K; fig3 sweeps S at g = 0.3;
// fig4 sweeps g at S = 3 ueV; fig5 sweeps T at S = 2.5 ueV, g = 0.2
// (all with omega = 50 ps; fig3/fig4 at T = 5 K). Sweep grids and time
// grids are artifact defaults.
struct FigureSpec {
  FigureId id;
  RunConfig config;
};

FigureSpec resolve_figure(FigureId id);

// Deterministic serializations used by every writer.
std::string evolve_csv(const std::vector<LGPoint>& points);
std::string evolve_json(const RunConfig& cfg, const std::vector<LGPoint>& points);
std::string sweep_summary_csv(const SweepResult& result);
std::string sweep_json(const RunConfig& cfg, const SweepResult& result);

// Command entry points; out_override, when non-empty, replaces
// cfg.output_dir. Return the process exit status (0 success; errors are
// reported by throwing).
int cmd_evolve(const RunConfig& cfg, const std::string& out_override = "");
int cmd_sweep(const RunConfig& cfg, const std::string& out_override = "");
int cmd_figure(FigureId id, const std::string& out_override = "");
int cmd_validate(const ValidateOptions& options, std::ostream& out);

}  // namespace lgdot
