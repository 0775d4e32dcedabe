#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regiongray {

// Bad user input: malformed data, unsupported parameters, failed preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal structure that the theory guarantees was found broken.
class StructuralViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SizeGuardError : public InputError {
public:
    using InputError::InputError;
};

// Element limit for lattice construction; REGIONGRAY_MAX_ELEMENTS overrides the default of 2^16.
std::size_t max_elements();

void require_within_guard(std::size_t count, const std::string& what);

}  // namespace regiongray
