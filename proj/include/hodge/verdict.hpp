#pragma once

#include <string>
#include <vector>

namespace hodge {

/// Pass/fail outcome with human-readable failure messages.
struct Verdict {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string message) {
    ok = false;
    failures.push_back(std::move(message));
  }
  void absorb(const Verdict& other, const std::string& prefix = {}) {
    for (const auto& f : other.failures) fail(prefix + f);
  }
};

}  // namespace hodge
