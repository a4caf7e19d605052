#include "kcontact/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for left-invariant contact structures on Lie algebras"};
  app.require_subcommand(1);

  kc::cli::Options opts;
  bool as_json = false;
  std::string out;

  for (const auto& name : kc::cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    if (name != "lattice") sub->add_option("file", opts.file, "input .lie (or .mor for verify-morphism)")->required();
    if (name == "lattice") sub->add_option("--matrix", opts.matrix, "hyperbolic matrix entries a,b,c,d")->required();
    if (name != "lattice") sub->add_option("--specialize", opts.specialize, "evaluate the parameter, e.g. p=1/3");
    if (name == "cohomology" || name == "lefschetz")
      sub->add_option("--degree", opts.degrees, "comma-separated degrees")->delimiter(',');
    if (name == "contact") sub->add_option("--quotient", opts.quotient, ".lie file carrying a symplectic form");
    sub->add_flag("--json", as_json, "emit the JSON report");
    sub->add_option("--out", out, "write the report here instead of stdout");
    sub->callback([&opts, name] { opts.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 uses 0 for --help; everything else is a usage error
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const kc::cli::Report rep = kc::cli::run(opts);
  const std::string text = as_json ? rep.to_json() : rep.to_text();
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return rep.exit_code;
}
