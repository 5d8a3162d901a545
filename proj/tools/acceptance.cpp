#include <cstdlib>
#include <iostream>
#include <string>

#include "suite.hpp"

// One PASS/FAIL line per acceptance criterion. Arguments restrict the run to the
// listed criterion ids. Exit status is 0 only when every criterion run passes.
int main(int argc, char** argv) {
  using namespace xilab::tools;
  SuiteOptions opts;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    long id = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || id < 1 || id > criterion_count()) {
      std::cerr << "usage: xilab_acceptance [criterion ids 1.." << criterion_count() << "]\n";
      return 1;
    }
    opts.only.push_back(static_cast<int>(id));
  }
  opts.on_result = [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; };
  int failed = 0;
  for (const auto& r : run_suite(opts)) failed += r.pass ? 0 : 1;
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " criteria FAIL") << std::endl;
  return failed == 0 ? 0 : 1;
}
