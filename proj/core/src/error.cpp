#include "thetamirror/error.hpp"

namespace thetamirror {

Error::Error(std::string code, const std::string& message)
    : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace thetamirror
