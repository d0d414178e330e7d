#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lienard {

// Single exception type carrying a stable machine-readable error name
// (SingularShooting, NoCrossing, ...) next to the human-readable message.
// The CLI maps the name into diagnostics files and exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void raise(std::string name, const std::string& message) {
    throw Error(std::move(name), message);
}

}  // namespace lienard
