#pragma once

#include <stdexcept>
#include <string>

namespace elsv {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
    domain = 1,
    resource_limit = 2,
    internal_consistency = 3,
};

enum class ErrorCode {
    invalid_argument,
    dimension_mismatch,
    invalid_query,
    invalid_series,
    missing_bracket,
    unsupported_range,
    singular_system,
    invalid_fixed_point,
    parse_error,
    resource_limit,
    internal_consistency,
    derivation_failure,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    ErrorKind kind() const noexcept {
        switch (code_) {
        case ErrorCode::resource_limit:
            return ErrorKind::resource_limit;
        case ErrorCode::internal_consistency:
        case ErrorCode::derivation_failure:
            return ErrorKind::internal_consistency;
        default:
            return ErrorKind::domain;
        }
    }

    int exit_code() const noexcept { return static_cast<int>(kind()); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace elsv
