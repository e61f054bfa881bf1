#include <iostream>

#include "distideal/cli.hpp"

int main(int argc, char** argv) {
  return distideal::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
