#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmi {

struct AcceptanceOptions {
  std::int64_t max_level = 12;
  // Swap the split maximal fixture for a non-maximal order (negative control).
  bool corrupt_fixture = false;
  std::uint64_t seed = 20240601;
};

struct CriterionResult {
  enum class Status { Pass, Fail, Skip };
  int id = 0;
  std::string name;
  Status status = Status::Fail;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);
// One line: "PASS  C<id> <name>  <seconds>s (limit <limit>s)  <detail>".
std::string format_result(const CriterionResult& result);
// True when no criterion failed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace qmi
