#pragma once

#include <string>
#include <vector>

namespace compidx {

// One verified integer identity: lhs and rhs computed along different routes.
struct IdentityCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;

  bool pass() const { return lhs == rhs; }
};

inline bool all_pass(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

}  // namespace compidx
