#pragma once

#include <stdexcept>
#include <string>

namespace agora {

/// Machine-readable failure categories; the CLI maps these onto exit codes.
enum class ErrorCode {
    dimension_mismatch,
    invalid_economy,
    reducible_chain,
    singular_system,
    precondition_failed,
    parse_error,
    internal,
};

class SolverError : public std::runtime_error {
  public:
    SolverError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace agora
