#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kc {

// Base exception. `kind` is a stable machine-readable tag ("division-by-zero",
// "jacobi-violation", ...) that the CLI copies into reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)), message_(message) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string kind_;
  std::string message_;
};

}  // namespace kc
