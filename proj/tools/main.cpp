#include <iostream>

#include <CLI11.hpp>

#include "fatres/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fatres: graded free resolutions of fat point ideals with support in a hyperplane"};
  app.require_subcommand(1);

  fatres::CliOptions opts;
  std::string field;
  int bound = -1;

  auto add_common = [&](CLI::App* sub, bool with_verify) {
    sub->add_option("input", opts.input_path, "scheme JSON file")->required();
    sub->add_option("--field", field, "coefficient field: q or gf:<p>");
    sub->add_flag("--json", opts.json, "emit a JSON report");
    sub->add_option("--bound", bound, "degree bound for exactness checks");
    if (with_verify) sub->add_flag("--verify", opts.verify, "run the exactness verification");
  };

  CLI::App* resolve = app.add_subcommand("resolve", "mapping-cone resolution and report");
  add_common(resolve, true);
  resolve->add_flag("--minimize", opts.minimize, "also report the minimized Betti table");
  CLI::App* oracle = app.add_subcommand("oracle", "direct syzygy resolution in the ambient ring");
  add_common(oracle, true);
  CLI::App* criterion = app.add_subcommand("criterion", "containment criterion per ladder level");
  add_common(criterion, false);
  CLI::App* verify = app.add_subcommand("verify", "complex and exactness checks");
  add_common(verify, false);
  CLI::App* formula = app.add_subcommand("formula", "Poincare polynomial, ladder-only fast path");
  add_common(formula, false);

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : {resolve, oracle, criterion, verify, formula})
    if (sub->parsed()) opts.verb = sub->get_name();
  if (!field.empty()) opts.field = field;
  if (bound >= 0) opts.bound = bound;

  return fatres::run_command(opts, std::cout, std::cerr);
}
