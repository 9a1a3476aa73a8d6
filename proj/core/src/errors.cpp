#include "fixfactor/errors.hpp"

namespace fixfactor {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::name: return "E_NAME";
    case ErrorCode::continuity: return "E_CONTINUITY";
    case ErrorCode::cover: return "E_COVER";
    case ErrorCode::invariance: return "E_INVARIANCE";
    case ErrorCode::size: return "E_SIZE";
    case ErrorCode::ordinal: return "E_ORDINAL";
    case ErrorCode::term: return "E_TERM";
    case ErrorCode::depth: return "E_DEPTH";
    case ErrorCode::locator: return "E_LOCATOR";
    case ErrorCode::degree_cap: return "E_DEGREE_CAP";
    case ErrorCode::usage: return "E_USAGE";
    case ErrorCode::io: return "E_IO";
    case ErrorCode::format: return "E_FORMAT";
  }
  return "E_UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code), detail_(message) {}

ContinuityError::ContinuityError(std::string x, std::string y)
    : Error(ErrorCode::continuity,
            "(" + x + "," + y + "): " + x + " specializes " + y + " but the images do not"),
      x_(std::move(x)),
      y_(std::move(y)) {}

}  // namespace fixfactor
