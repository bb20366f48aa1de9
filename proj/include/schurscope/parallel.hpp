// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

namespace schurscope {

// Kernels with a data-parallel structure come in two variants. Serial is the
// reference implementation; Parallel uses OpenMP and must agree with it.
enum class Backend { Serial, Parallel };

void set_worker_count(int n);
int worker_count();

}  // namespace schurscope
