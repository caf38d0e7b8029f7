#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "coeffbounds/commands.hpp"
#include "coeffbounds/errors.hpp"

int main(int argc, char** argv) {
  using namespace coeffbounds;

  CLI::App app{"Search-based verification of inverse-coefficient bounds for close-to-convex classes"};
  std::string command, cls, format = "json", out;
  int n = 0, grid = 0, refine = -1, multistart = 0;
  std::uint64_t seed = 42;
  std::size_t samples = 0;
  bool negative_control = false;

  app.add_option("command", command, "verify | identities | extremals | omega-check")
      ->required()
      ->check(CLI::IsMember({"verify", "identities", "extremals", "omega-check"}));
  app.add_option("--class", cls, "Restrict to one class")->check(CLI::IsMember({"F1", "F2", "F3", "F4"}));
  app.add_option("--n", n, "Restrict to one coefficient index")->check(CLI::Range(2, 5));
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--grid", grid, "Grid resolution (optimizer grid_n, or oracle grid)");
  app.add_option("--refine", refine, "Pattern-search polls per start");
  app.add_option("--multistart", multistart, "Number of refined starts");
  app.add_option("--samples", samples, "Batch size for identities and omega-check");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out, "Write the report here instead of stdout");
  app.add_flag("--negative-control", negative_control)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    RunConfig cfg;
    cfg.command = parse_command(command);
    if (!cls.empty()) cfg.cls = parse_class(cls);
    if (n) cfg.n = n;
    cfg.seed = seed;
    if (grid) cfg.grid = grid;
    if (refine >= 0) cfg.refine = refine;
    if (multistart) cfg.multistart = multistart;
    if (samples) cfg.samples = samples;
    cfg.format = parse_format(format);
    if (!out.empty()) cfg.out = out;
    cfg.negative_control = negative_control;

    const CommandResult res = run(cfg);
    const std::string text = render(res.report, cfg.format);
    if (cfg.out) {
      write_atomic(*cfg.out, text);
    } else {
      std::cout << text;
    }
    return res.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
