#pragma once

#include <stdexcept>
#include <string>

namespace qmi {

// Domain error carrying a stable machine-readable code ("ZeroNorm",
// "NotContained", ...). The CLI reports code() verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail);

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace qmi
