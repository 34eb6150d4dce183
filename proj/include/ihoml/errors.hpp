#pragma once

#include <stdexcept>
#include <string>

namespace ihoml {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Carrier enumeration was requested for a type whose carrier exceeds the
// configured cap (or overflows 64-bit arithmetic).
struct CarrierTooLarge : Error {
  explicit CarrierTooLarge(const std::string& msg) : Error(msg) {}
};

struct TypeMismatch : Error {
  explicit TypeMismatch(const std::string& msg) : Error(msg) {}
};

struct FrameClassViolation : Error {
  explicit FrameClassViolation(const std::string& msg) : Error(msg) {}
};

struct EmptyDomain : Error {
  explicit EmptyDomain(const std::string& msg) : Error(msg) {}
};

struct UnboundSymbol : Error {
  explicit UnboundSymbol(const std::string& msg) : Error(msg) {}
};

struct NotAPrimitive : Error {
  explicit NotAPrimitive(const std::string& msg) : Error(msg) {}
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& msg) : Error(msg) {}
};

}  // namespace ihoml
