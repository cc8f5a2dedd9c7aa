#include <iostream>

#include "stripcover/cli.hpp"

int main(int argc, char** argv) {
  return stripcover::run_cli(argc, argv, std::cout, std::cerr);
}
