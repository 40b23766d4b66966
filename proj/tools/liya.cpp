#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liya/io.hpp"

int main(int argc, char** argv) {
  std::string help_commands;
  for (const auto& name : liya::command_names()) {
    if (!help_commands.empty()) help_commands += ", ";
    help_commands += name;
  }

  CLI::App app{"exact checks and constructions for Lie-Yamaguti algebras"};
  std::string command, path, field_spec, fixtures;
  std::size_t max_degree = 3;
  unsigned long budget = liya::kEnumerationBudget;
  app.add_option("command", command, "one of: " + help_commands)->required();
  app.add_option("file", path, "input file")->required();
  app.add_option("--field", field_spec, "expected field, e.g. 'Q' or 'GF 2'");
  app.add_option("--max-degree", max_degree, "top cohomology degree (default 3)");
  app.add_option("--budget", budget, "enumeration budget (default 2^20)");
  app.add_option("--fixtures-dir", fixtures,
                 "directory tried when the file is not found as given");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the error itself
    return code == 0 ? 0 : 2;
  }

  liya::RunOptions opts;
  opts.max_degree = max_degree;
  opts.budget = budget;
  if (!field_spec.empty()) {
    std::istringstream is(field_spec);
    std::vector<std::string> words;
    std::string w;
    while (is >> w) words.push_back(w);
    try {
      opts.field = liya::parse_field_spec(words);
    } catch (const liya::input_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  std::ifstream in(path);
  if (!in.is_open() && !fixtures.empty()) in.open(fixtures + "/" + path);
  if (!in.is_open()) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  return liya::run_command(command, in, std::cout, opts);
}
