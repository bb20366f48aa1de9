// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <stdexcept>
#include <string>

namespace schurscope {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};
struct BadReduction : Error {
  using Error::Error;
};
struct RamifiedPlace : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace schurscope
