#include "cli/cli.hpp"

int main(int argc, char** argv) { return thermoinfo::cli::run(argc, argv); }
