#include "treeirr/cli.hpp"

int main(int argc, char** argv) { return treeirr::cli_main(argc, argv); }
