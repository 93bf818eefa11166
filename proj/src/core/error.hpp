#pragma once

#include <stdexcept>
#include <string>

namespace autoseq {

// Error codes shared with the C API (see include/autoseq/autoseq.h).
enum class errc : int {
    ok = 0,
    invalid_argument = 1,
    unknown_name = 2,
    domain = 3,
    cap_exceeded = 4,
    unsupported = 5,
    internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace autoseq
