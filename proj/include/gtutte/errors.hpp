#pragma once

#include <stdexcept>
#include <string>

namespace gtutte {

// Domain errors map to CLI exit code 1.
struct DomainError : std::runtime_error {
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code(std::move(code)) {}
  std::string code;
};

struct DimensionMismatch : DomainError {
  explicit DimensionMismatch(const std::string& what)
      : DomainError("DimensionMismatch", what) {}
};

struct CapExceeded : DomainError {
  explicit CapExceeded(const std::string& what)
      : DomainError("CapExceeded", what) {}
};

struct BudgetExceeded : DomainError {
  explicit BudgetExceeded(const std::string& what)
      : DomainError("BudgetExceeded", what) {}
};

struct NonFiniteGroup : DomainError {
  explicit NonFiniteGroup(const std::string& what)
      : DomainError("NonFiniteGroup", what) {}
};

struct CompactGroup : DomainError {
  explicit CompactGroup(const std::string& what)
      : DomainError("CompactGroup", what) {}
};

struct NonPolynomialResult : DomainError {
  explicit NonPolynomialResult(const std::string& what)
      : DomainError("NonPolynomialResult", what) {}
};

struct NonTorsionElement : DomainError {
  explicit NonTorsionElement(const std::string& what)
      : DomainError("NonTorsionElement", what) {}
};

struct TorsionGroup : DomainError {
  explicit TorsionGroup(const std::string& what)
      : DomainError("TorsionGroup", what) {}
};

struct UnsupportedType : DomainError {
  explicit UnsupportedType(const std::string& what)
      : DomainError("UnsupportedType", what) {}
};

struct ParseError : DomainError {
  explicit ParseError(const std::string& what)
      : DomainError("ParseError", what) {}
};

}  // namespace gtutte
