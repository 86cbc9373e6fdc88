#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mia {

// Buckets map 1:1 onto CLI exit codes: InputFormat = 2, Precondition = 3,
// Internal = 4.
enum class ErrorKind {
    InputFormat,
    Precondition,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Stable machine-readable identifier, e.g. "EmptyCategory" or "MassMismatch".
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void fail_input(const std::string& code, const std::string& message) {
    throw Error(ErrorKind::InputFormat, code, message);
}

[[noreturn]] inline void fail_precondition(const std::string& code, const std::string& message) {
    throw Error(ErrorKind::Precondition, code, message);
}

[[noreturn]] inline void fail_internal(const std::string& code, const std::string& message) {
    throw Error(ErrorKind::Internal, code, message);
}

}  // namespace mia
