#include <iostream>

#include "mpendo/cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return mpendo::run_cli(args, std::cout, std::cerr);
}
