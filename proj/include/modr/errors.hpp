#pragma once

#include <stdexcept>
#include <string>

namespace modr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph is not connected where a connected dual graph is required.
struct ConnectivityError : Error {
    using Error::Error;
};

// An enumeration or exhaustive check would exceed the caller's budget.
struct BudgetError : Error {
    BudgetError(const std::string& msg, std::string exact_count)
        : Error(msg), count(std::move(exact_count)) {}
    std::string count;  // exact count as decimal string
};

// Malformed arguments: unresolved ids, missing assignments, mixed inputs.
struct ArgumentError : Error {
    using Error::Error;
};

// Input outside the operation's mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

// A regime hypothesis (size / divisibility / nontrivial nodal contact) fails.
struct RegimeError : Error {
    using Error::Error;
};

}  // namespace modr
