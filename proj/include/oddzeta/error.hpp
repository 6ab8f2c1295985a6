#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddzeta {

enum class ErrorKind {
  invalid_precision,
  unsupported_constant,
  invalid_argument,
  context_mismatch,
  precision_mismatch,
  missing_dependency,
  domain,
  pole,
  truncation_insufficient,
  not_found,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require_argument(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::invalid_argument, what);
}

}  // namespace oddzeta
