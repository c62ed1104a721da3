#include <iostream>
#include "braidmono/verify.hpp"
using namespace braidmono;
int main() {
  auto reports = run_suite("");
  for (const auto& r : reports) std::cout << report_line(r) << "\n";
  std::cout << "suite_failed: " << (suite_failed(reports) ? "YES" : "no") << "\n";
  return 0;
}
