#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dichro {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string suite;  // core, sparse, orient or kneser
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

/// Runs the acceptance criteria of `suite` ("all" or one suite name). A
/// criterion passes only when its checks hold and it finishes inside its limit.
/// `on_result` sees each result as soon as it is available.
std::vector<CriterionResult> run_acceptance(const std::string& suite, std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::vector<std::string> acceptance_suites();

std::string format_line(const CriterionResult& r);
std::string format_table(const std::vector<CriterionResult>& results);
std::string format_csv(const std::vector<CriterionResult>& results);

}  // namespace dichro
