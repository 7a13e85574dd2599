#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace brieskorn {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Names accepted by run_verification, in replay order.
const std::vector<std::string>& verification_names();

/// Replays one bundled example ("all" for every one). Throws
/// UnknownExampleError for an unknown name.
std::vector<CheckResult> run_verification(const std::string& name, const std::filesystem::path& data_dir);

/// {"passed": bool, "results": [{"name", "passed", "detail"}]}
std::string verification_json(const std::vector<CheckResult>& results);

}  // namespace brieskorn
