#pragma once

#include <stdexcept>
#include <string>

namespace skcat {

/* Malformed input: bad files, bad parameters, mixed fields.  CLI exit 2. */
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/* A mathematically meaningful failure: non-composable pair, disconnected
 * category where connectivity is required, no connector set, undecidable
 * word equality.  CLI exit 1. */
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace skcat
