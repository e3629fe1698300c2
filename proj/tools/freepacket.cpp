#include "freepacket/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return freepacket::run_cli(argc, argv, std::cout, std::cerr);
}
