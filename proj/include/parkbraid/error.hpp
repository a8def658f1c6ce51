#pragma once

#include <stdexcept>
#include <string>

namespace parkbraid {

/// Precondition or input failure. `code()` is a short stable identifier
/// (e.g. "rank_mismatch", "invalid_parking") used by the CLI error line.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// A proven invariant failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace parkbraid
