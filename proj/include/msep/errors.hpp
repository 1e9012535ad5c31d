#pragma once

#include <stdexcept>
#include <string>

namespace msep {

// Error categories map onto CLI exit codes: usage = 2, format = 3,
// precondition = 4.

class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

class format_error : public std::runtime_error {
public:
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace msep
