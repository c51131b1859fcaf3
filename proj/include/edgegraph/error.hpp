#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace edgegraph {

// Base for every library error. `code()` is a stable, machine-parseable
// identifier (the CLI prints "<code>: <message>" on stderr).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace edgegraph
