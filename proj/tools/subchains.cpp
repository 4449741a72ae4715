#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "subchains/cli.hpp"

int main(int argc, char** argv) {
  subchains::cli::Settings settings;
  try {
    settings = subchains::cli::Settings::from_environment();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return subchains::cli::kExitUsage;
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return subchains::cli::run(args, std::cout, std::cerr, settings);
}
