// Command-line front end: one subcommand per report type.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orbihall/cli.hpp"

int main(int argc, char** argv) {
  using orbihall::cli::Command;
  CLI::App app{"Orbifold Landau levels: exact ladders, transport tables and lattice validation"};
  app.require_subcommand(1);

  struct Args {
    std::string input;
    std::string output;
    std::string convention;
    std::string csv;
    std::int64_t cap = 0;
    std::int64_t seed = 0;
  } args;

  const std::pair<Command, const char*> commands[] = {
      {Command::info, "Euler characteristics, canonical degree and cover data"},
      {Command::riemann_roch, "Riemann-Roch counts of a bundle and its canonical twists"},
      {Command::spectrum, "Landau-level ladder of a bundle on a cover"},
      {Command::transport, "Mean charge transport and Hall conductance table"},
      {Command::validate, "Lattice validation on the pillowcase"},
      {Command::pullback_demo, "Pullback classes along a cyclic etale cover of an elliptic curve"},
  };
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(orbihall::cli::to_string(cmd), help);
    sub->add_option("--input", args.input, "input JSON file")->required();
    sub->add_option("--output", args.output, "report path (default: standard output)");
    sub->add_option("--seed", args.seed, "reserved; ignored");
    if (cmd == Command::transport) {
      sub->add_option("--convention", args.convention, "sign convention")->check(CLI::IsMember({"theorem", "proof"}));
    }
    if (cmd == Command::spectrum) sub->add_option("--cap", args.cap, "ladder cap for flat and spherical covers");
    if (cmd == Command::validate) sub->add_option("--csv", args.csv, "write raw eigenvalues to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : orbihall::cli::kInvalid;
  }

  CLI::App* sub = app.get_subcommands().front();
  orbihall::cli::JobSpec job;
  job.command = orbihall::cli::command_from_string(sub->get_name());
  job.input_path = args.input;
  if (sub->count("--output") > 0) job.output_path = args.output;
  if (sub->get_option_no_throw("--convention") && sub->count("--convention") > 0) job.options["convention"] = args.convention;
  if (sub->get_option_no_throw("--cap") && sub->count("--cap") > 0) job.options["cap"] = std::to_string(args.cap);
  if (sub->get_option_no_throw("--csv") && sub->count("--csv") > 0) job.options["csv"] = args.csv;
  if (sub->count("--seed") > 0) job.options["seed"] = std::to_string(args.seed);
  return orbihall::cli::run(job, std::cout, std::cerr);
}
