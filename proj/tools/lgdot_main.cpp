// lgdot command-line front end: evolve, sweep, figure, validate.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lgdot/commands.hpp"
#include "lgdot/version.hpp"

namespace {

lgdot::RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw lgdot::InvalidInput("cannot read config file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return lgdot::parse_config(text.str(), &std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leggett-Garg inequality simulator for quantum-dot biexciton cascades"};
  app.set_version_flag("--version", std::string("lgdot ") + lgdot::version);
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_dir;
  std::string figure_name;

  CLI::App* evolve = app.add_subcommand("evolve", "Time series of K(t), K(2t), K+ and K-");
  evolve->add_option("--config", config_path, "Run configuration file")->required();
  evolve->add_option("--out", out_dir, "Output directory (overrides run.output_dir)");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "One curve per value of the swept axis");
  sweep_cmd->add_option("--config", config_path, "Run configuration file")->required();

  CLI::App* figure = app.add_subcommand("figure", "Reproduce a canned figure run");
  figure->add_option("id", figure_name, "One of fig2, fig3, fig4, fig5")->required();
  figure->add_option("--out", out_dir, "Output directory");

  app.add_subcommand("validate", "Run the oracle suite and report pass/fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    app.exit(e);
    return 2;
  }

  try {
    if (evolve->parsed()) {
      return lgdot::cmd_evolve(load_config(config_path), out_dir);
    }
    if (sweep_cmd->parsed()) {
      return lgdot::cmd_sweep(load_config(config_path));
    }
    if (figure->parsed()) {
      const auto id = lgdot::parse_figure_id(figure_name);
      if (!id) {
        std::cerr << "error: unknown figure '" << figure_name
                  << "' (expected fig2, fig3, fig4 or fig5)\n";
        return 2;
      }
      return lgdot::cmd_figure(*id, out_dir);
    }
    if (app.get_subcommand("validate")->parsed()) {
      return lgdot::cmd_validate({}, std::cout);
    }
    std::cout << app.help();
    return 0;
  } catch (const lgdot::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lgdot::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
