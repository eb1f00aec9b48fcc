#include <iostream>
#include <string>
#include <vector>

#include "boxed_bertrand/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return boxed_bertrand::cli::run(args, std::cout, std::cerr);
}
