#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pencilgit {

// Domain error with a stable machine-readable code ("NotPrime", "FieldMismatch", ...).
class MathError : public std::runtime_error {
public:
    MathError(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw MathError(code, msg);
}

inline void require(bool cond, const std::string& code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace pencilgit
