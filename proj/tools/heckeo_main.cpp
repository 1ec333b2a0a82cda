#include <cstdlib>
#include <iostream>

#include "heckeo/cli/app.hpp"
#include "heckeo/cli/config.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return heckeo::cli::run(args, std::cout, std::cerr, std::getenv(heckeo::cli::kConfigEnv));
}
