#include <iostream>

#include "mso_cli/cli.hpp"

int main(int argc, char** argv) { return mso::cli::run(argc, argv, std::cout, std::cerr); }
