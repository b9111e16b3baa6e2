#include <cstdlib>
#include <iostream>
#include <string>

#include "dioph/acceptance.hpp"

int main(int argc, char** argv) {
  dioph::acceptance::Options opts;
  for (int i = 1; i < argc; ++i) opts.only.push_back(std::stoi(argv[i]));
  opts.on_result = [](const dioph::acceptance::CriterionResult& r) {
    dioph::acceptance::print_result(std::cout, r);
    std::cout.flush();
  };
  const auto results = dioph::acceptance::run_all(opts);
  const bool ok = dioph::acceptance::all_passed(results);
  std::cout << (ok ? "acceptance: all checked criteria passed" : "acceptance: FAILED") << '\n';
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
