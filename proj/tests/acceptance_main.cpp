#include <cstdlib>
#include <iostream>
#include <string>

#include "qmi/acceptance.hpp"

int main(int argc, char** argv) {
  qmi::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--max-level" && i + 1 < argc) {
      options.max_level = std::strtoll(argv[++i], nullptr, 10);
    } else if (arg == "--corrupt-fixture") {
      options.corrupt_fixture = true;
    } else {
      std::cerr << "usage: qmi_acceptance [--max-level N] [--corrupt-fixture]\n";
      return 2;
    }
  }
  const auto results = qmi::run_acceptance(options);
  double total = 0;
  for (const auto& r : results) {
    std::cout << qmi::format_result(r) << "\n";
    total += r.seconds;
  }
  const bool ok = qmi::all_passed(results) && total < 60;
  std::cout << (ok ? "PASS" : "FAIL") << "  whole suite " << total << "s (limit 60s)\n";
  return ok ? 0 : 1;
}
