#pragma once

#include <stdexcept>
#include <string>

namespace t2h {

// Bad input: schema violations, malformed phrases, inconsistent fixtures.
// CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that the numerics cannot handle (all-zero memberships,
// degenerate denominators). CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace t2h
