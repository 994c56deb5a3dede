// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace taqr {

// Failure classes map 1:1 onto CLI exit codes:
//   1 usage, 2 I/O, 3 validation (bad input values), 4 internal invariant.
enum class ErrorKind : int {
  kUsage = 1,
  kIo = 2,
  kValidation = 3,
  kInternal = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace taqr
