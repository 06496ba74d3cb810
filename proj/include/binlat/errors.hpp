#pragma once

#include <stdexcept>
#include <string>

namespace binlat {

// Bad input: parameters out of range, malformed grids, unknown flags.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical procedure failed to deliver a result meeting its contract.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace binlat
