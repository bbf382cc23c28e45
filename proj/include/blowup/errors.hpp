#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ContextMismatch : Error {
  explicit ContextMismatch(const std::string& what) : Error("context mismatch: " + what) {}
};

struct NotBihomogeneous : Error {
  explicit NotBihomogeneous(const std::string& what) : Error("not bihomogeneous: " + what) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

struct DegreeBoundExceeded : Error {
  explicit DegreeBoundExceeded(const std::string& what) : Error("degree bound exceeded: " + what) {}
};

struct InstanceRejected : Error {
  explicit InstanceRejected(const std::string& why) : Error("instance rejected: " + why), reason(why) {}
  std::string reason;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace blowup
