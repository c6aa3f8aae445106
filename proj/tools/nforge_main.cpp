#include "nforge/cli_io.hpp"

#include <iostream>

int main(int argc, char** argv) { return nforge::io::run_command(argc, argv, std::cout, std::cerr); }
