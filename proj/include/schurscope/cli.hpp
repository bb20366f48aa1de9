// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schurscope/funfam.hpp"
#include "schurscope/permgroup.hpp"

namespace schurscope {

// Exit codes: 0 success, 1 failed assertion (verify-paper), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "builtin:isogeny5", "builtin:dickson:5:1", ... or a path to a file in the text format.
QRatFunc load_function(const std::string& spec);
// "named:psl2 8 on=..." or a path to {"degree": n, "generators": ["(0 1 2)", ...]}.
PermGroup load_group(const std::string& spec);

}  // namespace schurscope
