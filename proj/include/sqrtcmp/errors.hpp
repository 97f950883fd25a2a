#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqrtcmp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text does not match the expression grammar, or a literal
// exceeds the supported integer range.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position + 1) + ")"),
          position(position) {}
    std::size_t position;  // 0-based byte offset into the input
};

// An operation required a square-free value and got one with a square factor.
struct NotSquarefreeError : Error {
    using Error::Error;
};

// A value is not a subset product of the given generator set.
struct NotGeneratedError : Error {
    using Error::Error;
};

// Two elements of different multiquadratic fields were combined.
struct GeneratorMismatchError : Error {
    using Error::Error;
};

// A configured budget (enumeration size, sieve memory, field dimension)
// would be exceeded.
struct ResourceError : Error {
    using Error::Error;
};

// An interval narrower than the certified separation bound still straddles
// zero for syntactically unequal sums. Signals an arithmetic bug or a
// genuine counterexample to the bound; never resolved silently.
struct BoundViolationError : Error {
    using Error::Error;
};

// An internal algebraic invariant failed (e.g. a conjugate product with a
// nonzero irrational coordinate). Always a bug, never valid output.
struct InvariantViolationError : Error {
    using Error::Error;
};

}  // namespace sqrtcmp
