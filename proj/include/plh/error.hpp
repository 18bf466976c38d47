#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plh {

enum class ErrorCode {
  parse,
  division_by_zero,
  not_dyadic,
  domain,
  non_canonical,
  precondition,
  iteration_cap,
  verification,
  usage,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::parse:
    return "E_PARSE";
  case ErrorCode::division_by_zero:
    return "E_DIV_ZERO";
  case ErrorCode::not_dyadic:
    return "E_NOT_DYADIC";
  case ErrorCode::domain:
    return "E_DOMAIN";
  case ErrorCode::non_canonical:
    return "E_NON_CANONICAL";
  case ErrorCode::precondition:
    return "E_PRECONDITION";
  case ErrorCode::iteration_cap:
    return "E_ITERATION_CAP";
  case ErrorCode::verification:
    return "E_VERIFICATION";
  case ErrorCode::usage:
    return "E_USAGE";
  }
  return "E_UNKNOWN";
}

/// Every failure raised by the library carries a stable code so that the CLI
/// can print a one-line machine-parsable diagnostic.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace plh
