#include <iostream>

#include "crystbraid/cli.hpp"

int main(int argc, char** argv) {
  return cryst::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
