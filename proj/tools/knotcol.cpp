#include <iostream>

#include "knotcol/cli.hpp"

int main(int argc, char **argv)
{
  return knotcol::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
