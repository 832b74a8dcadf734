#pragma once

#include <stdexcept>
#include <string>

namespace sta {

/// Domain-rule violation (exit code 1 in the CLI).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (exit code 2 in the CLI).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoSourcesViolation : DomainError {
  explicit NoSourcesViolation(const std::string& vertex)
      : DomainError("vertex '" + vertex + "' receives no edge"), vertex(vertex) {}
  std::string vertex;
};

struct DuplicateId : DomainError {
  explicit DuplicateId(const std::string& id)
      : DomainError("duplicate identifier '" + id + "'") {}
};

struct NotComposable : DomainError {
  NotComposable() : DomainError("paths are not composable") {}
};

struct NotACycle : DomainError {
  NotACycle() : DomainError("path is not a cycle") {}
};

struct UnknownSymbol : ParseError {
  explicit UnknownSymbol(const std::string& id)
      : ParseError("unknown symbol '" + id + "'") {}
};

struct DimensionMismatch : DomainError {
  using DomainError::DomainError;
};

struct DepthInsufficient : DomainError {
  using DomainError::DomainError;
};

struct BaseMismatch : DomainError {
  BaseMismatch() : DomainError("vectors live over different base units") {}
};

struct ZeroElement : DomainError {
  ZeroElement() : DomainError("element is zero") {}
};

struct NotInjective : DomainError {
  using DomainError::DomainError;
};

struct ImageMismatch : DomainError {
  using DomainError::DomainError;
};

struct NotEdgeShift : DomainError {
  using DomainError::DomainError;
};

}  // namespace sta
