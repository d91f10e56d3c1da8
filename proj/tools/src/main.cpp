#include <iostream>

#include "klcalc/cli/cli.hpp"

int main(int argc, char** argv) {
  return klcalc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
