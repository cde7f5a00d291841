// Runs the twelve acceptance criteria, one line each; exit status 1 if any fails.

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "engel/acceptance.hpp"

int main(int argc, char** argv) {
  engel::AcceptanceOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  int passed = 0;
  engel::run_acceptance(opt, [&](const engel::CriterionResult& r) {
    passed += r.pass ? 1 : 0;
    std::cout << engel::format_result(r) << std::endl;
  });
  std::cout << passed << '/' << engel::kCriterionCount << " criteria passed" << std::endl;
  return passed == engel::kCriterionCount ? EXIT_SUCCESS : EXIT_FAILURE;
}
