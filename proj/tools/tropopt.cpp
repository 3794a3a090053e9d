#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropical/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Closed-form tropical (max-plus) optimization with boundary constraints"};
  app.require_subcommand(1);

  std::string input;
  std::string output = "-";
  bool pretty = false;
  std::vector<double> point;
  tropical::oracle::VerifyOptions verify_options;

  auto* solve = app.add_subcommand("solve", "Solve a problem file and write the solution");
  solve->add_option("input", input, "Problem file, or - for stdin")->required();
  solve->add_option("-o,--output", output, "Solution file, or - for stdout")->capture_default_str();
  solve->add_flag("--pretty", pretty, "Indent the JSON output");

  auto* eval = app.add_subcommand("eval", "Evaluate the objective at a point");
  eval->add_option("input", input, "Problem file, or - for stdin")->required();
  eval->add_option("--point", point, "Comma-separated coordinates")
      ->required()
      ->delimiter(',')
      ->allow_extra_args(false);
  eval->add_flag("--pretty", pretty, "Indent the JSON output");

  auto* verify = app.add_subcommand("verify", "Solve, then check the solution by brute force");
  verify->add_option("input", input, "Problem file, or - for stdin")->required();
  verify->add_option("--step", verify_options.step, "Lattice step of the oracle grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--samples", verify_options.samples, "Sampled points inside and outside the interval")
      ->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--threads", verify_options.threads, "Oracle threads, 0 for all cores")
      ->capture_default_str();
  verify->add_flag("--pretty", pretty, "Indent the JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tropical::cli::kIoError;
  }

  if (*solve) return tropical::cli::solve_command(input, output, pretty, std::cerr);
  if (*eval) return tropical::cli::eval_command(input, point, pretty, std::cout, std::cerr);
  return tropical::cli::verify_command(input, verify_options, pretty, std::cout, std::cerr);
}
