#ifndef K3DREAM_CASES_HPP
#define K3DREAM_CASES_HPP

#include <string>
#include <vector>

namespace k3dream {

// One recorded value checked against its recomputation. Golden values are
// never updated silently: a mismatch simply fails.
struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string paper_tag;
};

struct CaseReport {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Registry resolution order: explicit argument, K3DREAM_REGISTRY from the
// environment, then the compiled-in default.
std::string default_registry_path();

std::vector<std::string> registry_case_names(const std::string& path = "");

// Runs the full pipeline for one registry case and compares every recorded
// constant. Throws UnknownCase for names outside the registry.
CaseReport run_case(const std::string& name, const std::string& path = "");

std::vector<CaseReport> run_all_cases(const std::string& path = "");

} // namespace k3dream

#endif
