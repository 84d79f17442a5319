#pragma once

#include <stdexcept>
#include <string>

namespace thetamirror {

// Every recoverable failure carries a short machine-readable code
// ("not-in-complex", "missing-invariant", ...) next to the message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message);

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] void fail(const std::string& code, const std::string& message);

inline void require(bool condition, const std::string& code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace thetamirror
