#include <iostream>
#include <string>
#include <vector>

#include "qder/cli.hpp"

int main(int argc, char** argv) {
  return qder::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
