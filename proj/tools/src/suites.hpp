#ifndef POLYRING_TOOLS_SUITES_HPP
#define POLYRING_TOOLS_SUITES_HPP

#include <functional>
#include <string>
#include <vector>

namespace polyring::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;
  int failed() const;
  std::string json() const;
  std::string text() const;
};

using Task = std::function<CheckResult()>;

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Tasks run on up to jobs worker threads; results keep task order.
std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, int jobs);
// DomainError for an unknown suite.
Report run_suite(const std::string& name, int jobs = 1);

}  // namespace polyring::cli

#endif
