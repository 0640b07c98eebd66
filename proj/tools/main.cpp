#include <iostream>
#include <string>
#include <vector>

#include "discord/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return discord::cli::run(args, std::cout, std::cerr);
}
