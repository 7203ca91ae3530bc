#ifndef ARTIN_ERRORS_HPP
#define ARTIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace artin {

/// Malformed input: bad files, bad polynomials, bad parameters. CLI exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation exceeded a configured size bound. CLI exit code 3.
class resource_guard_error : public std::runtime_error {
public:
    explicit resource_guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two independent routes to the same value disagreed. CLI exit code 4.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace artin

#endif
