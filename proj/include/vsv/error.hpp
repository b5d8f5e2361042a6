// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace vsv {

enum class ErrorKind {
  kSyntax,
  kSchema,
  kUnknownNode,
  kUnknownPort,
  kDuplicateId,
  kClassInvariant,
  kUnknownSymbol,
  kReservedSymbol,
  kPortMismatch,
  kIllegalIdentifier,
  kStateCap,
  kBinaryMissing,
  kTimeout,
  kEngineFailure,
  kTraceParse,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "syntax error";
    case ErrorKind::kSchema: return "schema violation";
    case ErrorKind::kUnknownNode: return "unknown node";
    case ErrorKind::kUnknownPort: return "unknown port";
    case ErrorKind::kDuplicateId: return "duplicate id";
    case ErrorKind::kClassInvariant: return "class invariant violation";
    case ErrorKind::kUnknownSymbol: return "unknown symbol";
    case ErrorKind::kReservedSymbol: return "reserved symbol";
    case ErrorKind::kPortMismatch: return "port mismatch";
    case ErrorKind::kIllegalIdentifier: return "illegal identifier";
    case ErrorKind::kStateCap: return "state-cap";
    case ErrorKind::kBinaryMissing: return "binary missing";
    case ErrorKind::kTimeout: return "timeout";
    case ErrorKind::kEngineFailure: return "engine failure";
    case ErrorKind::kTraceParse: return "trace parse error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vsv
