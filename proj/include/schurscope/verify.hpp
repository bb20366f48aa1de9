// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Reference checks for the tabulated genus, fixed-point and exceptionality
// values and the sweep and curve identities. Each check
// recomputes its values from scratch and compares them to fixed expectations.

#pragma once

#include <string>
#include <vector>

namespace schurscope {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;  // human-readable table or mismatch list
  double seconds = 0;
};

// genus-table, genus0, fixed-points, exceptionality, sweeps, elliptic, deg16
const std::vector<std::string>& reference_check_names();
CheckResult run_reference_check(const std::string& name);

}  // namespace schurscope
