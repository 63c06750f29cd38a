#include "clt/error.hpp"

namespace clt {

const char* code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::range: return "range_error";
    case ErrorCode::pole: return "pole_error";
    case ErrorCode::domain: return "domain_error";
    case ErrorCode::conditioning: return "conditioning_error";
    case ErrorCode::accuracy: return "accuracy_error";
    case ErrorCode::constraint: return "constraint_error";
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::config: return "config_error";
  }
  return "error";
}

}  // namespace clt
