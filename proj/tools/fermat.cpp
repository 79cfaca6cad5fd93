#include <iostream>

#include "fermat/cli.hpp"

int main(int argc, char** argv) {
  return fermat::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
