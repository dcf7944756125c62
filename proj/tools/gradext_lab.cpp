// Command line front end. Subcommands fill in as the library grows.
#include <CLI11.hpp>

#include "gradext/fp.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact computations with graded algebras over prime fields"};
  app.require_subcommand(0);
  CLI11_PARSE(app, argc, argv);
  return 0;
}
