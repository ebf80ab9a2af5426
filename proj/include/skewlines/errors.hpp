#pragma once
#include <stdexcept>
#include <string>

namespace skew {

// Input that parses but violates a documented precondition (wrong parity,
// non-bijection, size guard).  The CLI maps this to exit code 1.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input that does not parse at all.  The CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace skew
