#include <iostream>
#include <string>
#include <vector>

#include "tenfold/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tenfold::cli::dispatch(std::move(args), std::cout, std::cerr);
}
