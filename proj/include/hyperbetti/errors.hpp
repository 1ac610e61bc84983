#pragma once

#include <stdexcept>
#include <string>

namespace hyperbetti {

// Malformed user input: bad files, out-of-range vertices, unsatisfiable specs.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because it would exceed a configured enumeration limit.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperbetti
