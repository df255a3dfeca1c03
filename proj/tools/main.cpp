#include <iostream>

#include "gjts/cli.hpp"
#include "gjts/errors.hpp"

int main(int argc, char** argv) {
  try {
    auto config = gjts::parse_cli(argc, argv, std::cout);
    if (!config) return gjts::kExitPassed;
    return gjts::run(*config, std::cout, std::cerr);
  } catch (const gjts::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    std::cerr << "run with --help for options\n";
    return gjts::kExitUsage;
  }
}
