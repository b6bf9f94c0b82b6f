#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stabloc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched lengths, bad indices, wrong matrix shapes.
struct DimensionError : Error {
    using Error::Error;
};

/// Input violates a structural requirement (non-Hermitian operator,
/// anticommuting generators, trivial codespace, invalid cellulation, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// A theorem hypothesis or operation precondition does not hold.
/// Distinct from ValidationError so callers can tell "this input is
/// malformed" apart from "the theorem does not apply here".
struct PreconditionError : Error {
    using Error::Error;
};

/// Request exceeds a configured size cap (dense dimension, enumeration size).
struct ResourceError : Error {
    using Error::Error;
};

/// Subset search ran out of its work budget. Carries the best bound
/// established before the abort.
struct BudgetError : Error {
    BudgetError(const std::string& msg, int lower_bound, std::uint64_t examined)
        : Error(msg), lower_bound(lower_bound), subsets_examined(examined) {}

    int lower_bound;
    std::uint64_t subsets_examined;
};

/// Text input could not be parsed. Carries a 1-based line number when known.
struct ParseError : Error {
    explicit ParseError(const std::string& msg, int line = 0) : Error(msg), line(line) {}

    int line;
};

/// Two routes that must agree disagreed. This indicates a bug in this
/// library, never a property of the input.
struct InternalConsistencyError : Error {
    using Error::Error;
};

} // namespace stabloc
