#pragma once

#include <stdexcept>
#include <string>

namespace quadideal {

// Error classes map onto CLI exit codes: parse_error -> 1,
// domain_error -> 2, unsupported_error -> 3.

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace quadideal
