// Prints one PASS/FAIL line per acceptance criterion; exit 0 iff none fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "simint/acceptance.hpp"

int main(int argc, char** argv) {
  simint::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::stoull(argv[++i]);
    } else if (arg == "--only" && i + 1 < argc) {
      options.only.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--seed N] [--only ID]...\n";
      return 2;
    }
  }
  std::cout << "seed " << options.seed << std::endl;
  auto results = simint::run_acceptance(options, std::cout, std::cout);
  return simint::all_passed(results) ? 0 : 1;
}
