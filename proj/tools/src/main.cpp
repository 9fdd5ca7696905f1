#include <iostream>

#include "jordan2/cli.hpp"

int main(int argc, char** argv) {
  return jordan2::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
