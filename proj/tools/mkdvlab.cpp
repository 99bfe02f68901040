#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mkdvlab/commands.hpp"
#include "mkdvlab/persistence.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for the periodic modified KdV equation"};
  app.set_version_flag("--version", mkdv::version_string());
  app.require_subcommand(1, 1);

  mkdv::CommandOptions opts;
  std::uint64_t seed = 0;
  int threads = 0;
  for (const std::string& verb : mkdv::command_verbs()) {
    CLI::App* sub = app.add_subcommand(verb, "run the " + verb + " experiment");
    sub->add_option("--config", opts.config, "JSON configuration file")->required();
    sub->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    sub->add_option("--seed", seed, "override the configuration seed");
    sub->add_option("--threads", threads, "worker thread count")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? mkdv::kExitOk : mkdv::kExitValidation;
  }

  CLI::App* chosen = app.get_subcommands().front();
  opts.verb = chosen->get_name();
  if (chosen->count("--seed") > 0) opts.seed = seed;
  if (chosen->count("--threads") > 0) opts.threads = threads;
  return mkdv::run_command(opts, std::cout, std::cerr);
}
