// Command-line frontend: truncation generators, resolutions, associated
// graded Betti tables and Koszulness verdicts for weighted polynomial rings.

#include "nsk/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  CLI::App app{"Truncations of weighted polynomial rings and their Koszulness"};
  app.require_subcommand(1);

  nsk::JobSpec job;
  std::string format = "text";
  int bound = -1;
  int layer = -1;
  std::string cas;

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--ring", job.ring, "ring, e.g. x=1,y=3@32003")->required();
    sub->add_option("--e", job.e, "truncation threshold")->required();
    sub->add_option("--bound", bound, "degree bound (default e + n*maxweight + n)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  const std::map<std::string, std::string> commands = {
      {"gens", "minimal generators of the truncation"},
      {"resolve", "weighted Betti table of the minimal resolution"},
      {"gr-betti", "Betti table of the associated graded module"},
      {"gr-hilbert", "Hilbert function of the associated graded module"},
      {"lin-check", "acyclicity of the linear part of the resolution"},
      {"construct", "Betti table predicted by the filtration recursion"},
      {"koszul", "all three verdicts with evidence"},
      {"ses-check", "Hilbert additivity of the filtration layers"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    addCommon(sub);
    if (name == "resolve") {
      sub->add_flag("--differentials", job.differentials, "print the differentials");
      sub->add_option("--emit-cas", cas, "write a Macaulay2 script to this file");
    }
    if (name == "construct" || name == "koszul")
      sub->add_flag("--trace", job.trace, "print the construction trace");
    if (name == "ses-check")
      sub->add_option("--layer", layer, "single layer index")
          ->check(CLI::NonNegativeNumber);
  }

  CLI::App* sweep = app.add_subcommand("sweep", "verdicts over a grid of weights and thresholds");
  sweep->add_option("--max-vars", job.sweep.max_vars)->required();
  sweep->add_option("--max-weight", job.sweep.max_weight)->required();
  sweep->add_option("--min-e", job.sweep.min_e, "default 1");
  sweep->add_option("--max-e", job.sweep.max_e)->required();
  sweep->add_option("--bound", bound, "fixed bound for every case")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--workers", job.workers, "parallel cases")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : nsk::kExitInputError;
  }

  job.command = app.get_subcommands().front()->get_name();
  job.format = format == "json"  ? nsk::OutputFormat::json
               : format == "csv" ? nsk::OutputFormat::csv
                                 : nsk::OutputFormat::text;
  if (bound >= 0) {
    job.bound = bound;
    job.sweep.bound = bound;
  }
  if (layer >= 0)
    job.layer = layer;
  if (!cas.empty())
    job.emit_cas = cas;
  return nsk::run_command(job, std::cout, std::cerr);
}
