#pragma once

#include <string>
#include <vector>

#include "thetalift/theta.hpp"

namespace thetalift {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Known check names: conservation, tower, duality, llc-roundtrip,
// appendix-j.  Throws validation_error on an unknown name.
std::vector<CheckResult> run_checks(const ThetaContext& ctx,
                                    const std::vector<std::string>& names);

std::vector<std::string> all_check_names();

}  // namespace thetalift
