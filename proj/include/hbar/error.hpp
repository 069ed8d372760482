#pragma once

#include <stdexcept>
#include <string>

namespace hbar {

// Every failure surfaced to callers carries a stable machine code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

    const std::string& code() const { return code_; }
    const std::string& context() const { return context_; }

private:
    std::string code_;
    std::string context_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message,
                              const std::string& context = {}) {
    throw Error(code, message, context);
}

} // namespace hbar
