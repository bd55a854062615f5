#pragma once

#include <stdexcept>
#include <string>

namespace prelie {

/// Malformed or inconsistent input: bad rationals, shape mismatches,
/// violated operation preconditions.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds the desk-scale limits (tensor degree or dimension).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace prelie
