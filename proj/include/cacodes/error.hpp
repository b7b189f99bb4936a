#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cacodes {

/// Domain error carrying a stable machine-readable name (e.g. "NotPrime").
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& message) {
    throw Error(name, message);
}

}  // namespace cacodes
