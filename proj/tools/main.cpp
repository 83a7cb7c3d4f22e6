#include <iostream>
#include <string>
#include <vector>

#include "bsg/cli.hpp"

int main(int argc, char* argv[]) {
  return bsg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
