#include <iostream>

#include "CLI11.hpp"
#include "alonzo/cli.hpp"

using namespace alonzo;

int main(int argc, char** argv) {
  CLI::App app{"Check, transport, render and model-check Alonzo theory files"};
  app.require_subcommand(1);

  Inputs in;
  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("files", in.paths, "Theory source files, loaded in order");
    cmd->add_flag("--corpus", in.corpus, "Load the bundled corpus ahead of the files");
  };

  auto* check = app.add_subcommand("check", "Parse, type-check and report open obligations");
  add_inputs(check);

  TransportOptions topts;
  auto* transport = app.add_subcommand("transport", "Translate an item along a morphism");
  add_inputs(transport);
  transport->add_option("--via", topts.via, "Morphism id")->required();
  transport->add_option("--item", topts.item, "Theorem or definition name")->required();
  transport->add_option("--as", topts.as, "Name of the installed item");
  transport->add_flag("--write", topts.write, "Install the item in the target theory file");

  RenderOptions ropts;
  auto* render = app.add_subcommand("render", "Print theories and morphisms");
  add_inputs(render);
  auto* latex = render->add_flag("--latex", ropts.latex, "LaTeX environments");
  bool compact = false;
  render->add_flag("--compact", compact, "Theory-source text (default)")->excludes(latex);
  render->add_option("--theory", ropts.theory, "Render only this theory");

  CountermodelOptions copts;
  auto* countermodel = app.add_subcommand("countermodel", "Search finite models for a counterexample");
  add_inputs(countermodel);
  countermodel->add_option("--theory", copts.theory, "Theory to search (default: first declared)");
  countermodel->add_option("--conjecture", copts.conjecture, "Axiom or theorem name, or a sentence")
      ->required();
  countermodel->add_option("--max-size", copts.max_size, "Largest carrier size")
      ->check(CLI::Range(0, 16));
  countermodel->add_option("--budget", copts.budget, "Search node budget");

  GraphStatsOptions gopts;
  auto* stats = app.add_subcommand("graph-stats", "Counts and obligation summary");
  add_inputs(stats);
  stats->add_option("--graph", gopts.graph, "Restrict to a declared graph");
  stats->add_flag("--json", gopts.json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  CommandResult r;
  if (*check) r = cmd_check(in);
  else if (*transport) r = cmd_transport(in, topts);
  else if (*render) r = cmd_render(in, ropts);
  else if (*countermodel) r = cmd_countermodel(in, copts);
  else r = cmd_graph_stats(in, gopts);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
