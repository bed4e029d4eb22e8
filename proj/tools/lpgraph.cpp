#include <iostream>

#include "lpgraph/cli.hpp"

int main(int argc, char** argv) { return lpgraph::cli_dispatch(argc, argv, std::cout, std::cerr); }
