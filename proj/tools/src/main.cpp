#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "incwb/cli/cli.hpp"

int main(int argc, char** argv) {
  try {
    return incwb::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "incwb: internal error: " << e.what() << '\n';
    return 70;
  }
}
