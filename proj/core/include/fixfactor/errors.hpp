#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fixfactor {

enum class ErrorCode {
  name,
  continuity,
  cover,
  invariance,
  size,
  ordinal,
  term,
  depth,
  locator,
  degree_cap,
  usage,
  io,
  format,
};

// Stable identifier such as "E_CONTINUITY".
std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Raised by validate_map; carries the offending specialization pair.
class ContinuityError : public Error {
 public:
  ContinuityError(std::string x, std::string y);

  const std::string& x() const noexcept { return x_; }
  const std::string& y() const noexcept { return y_; }

 private:
  std::string x_;
  std::string y_;
};

}  // namespace fixfactor
