#pragma once

#include <stdexcept>
#include <string>

namespace acmac {

// Invalid input data or misuse of an operation (bad pmf, mismatched axes,
// malformed file). Maps to exit code / status 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation exceeds the enumeration caps. Maps to status 3.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace acmac
