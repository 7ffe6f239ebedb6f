#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minors {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vertex set refers to vertices outside the graph, or a non-partition
// family was passed where a partition is required.
struct InvalidSetError : Error {
    using Error::Error;
};

// An operation precondition failed; the message names the violated condition.
struct PreconditionError : Error {
    using Error::Error;
};

// Input exceeds a documented size cap (graph order, oracle cap, ...).
struct SizeError : Error {
    using Error::Error;
};

// Exact-search node budget exhausted; never downgraded to a heuristic.
struct BudgetExceededError : Error {
    using Error::Error;
};

// A structural invariant that the algorithms guarantee was found broken.
struct InvariantViolation : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t at)
        : Error(what + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

}  // namespace minors
