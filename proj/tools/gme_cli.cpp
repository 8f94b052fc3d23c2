#include <iostream>

#include "gme_cli_app.hpp"

int main(int argc, char** argv) { return grover_gme::cli::run(argc, argv, std::cout, std::cerr); }
