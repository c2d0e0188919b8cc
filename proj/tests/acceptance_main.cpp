#include <cstdlib>
#include <iostream>
#include <string>

#include "dichro/acceptance.hpp"

// Usage: acceptance_tests [suite] [seed]
int main(int argc, char** argv) {
  const std::string suite = argc > 1 ? argv[1] : "all";
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20261015;
  const auto results = dichro::run_acceptance(
      suite, seed, [](const dichro::CriterionResult& r) { std::cout << dichro::format_line(r) << std::endl; });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return passed == results.size() ? 0 : 1;
}
