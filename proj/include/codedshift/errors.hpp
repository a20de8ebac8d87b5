#ifndef CODEDSHIFT_ERRORS_HPP
#define CODEDSHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace codedshift {

// Domain error with a stable machine-readable kind; the CLI maps these to
// typed JSON error reports and exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void raise(const char* kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace codedshift

#endif
