#include <iostream>

#include "pmd/cli.hpp"

int main(int argc, char** argv) {
  return pmd::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
