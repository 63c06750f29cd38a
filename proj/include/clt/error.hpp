#pragma once

#include <stdexcept>
#include <string>

namespace clt {

/// Stable machine-readable error categories. The CLI reports these codes in
/// JSON mode, so the spelling of `code_name` must not change.
enum class ErrorCode {
  range,         // argument outside a precomputed table (e.g. sieve limit)
  pole,          // evaluation exactly at a pole
  domain,        // argument outside the mathematical domain
  conditioning,  // too close to a singularity for the requested accuracy
  accuracy,      // an internal accuracy check failed
  constraint,    // polynomial/parameter constraint violated
  parse,         // malformed user input
  config,        // inconsistent configuration
};

const char* code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define CLT_DEFINE_ERROR(Name, Code)                                        \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

CLT_DEFINE_ERROR(RangeError, range)
CLT_DEFINE_ERROR(PoleError, pole)
CLT_DEFINE_ERROR(DomainError, domain)
CLT_DEFINE_ERROR(ConditioningError, conditioning)
CLT_DEFINE_ERROR(AccuracyError, accuracy)
CLT_DEFINE_ERROR(ConstraintError, constraint)
CLT_DEFINE_ERROR(ParseError, parse)
CLT_DEFINE_ERROR(ConfigError, config)

#undef CLT_DEFINE_ERROR

}  // namespace clt
