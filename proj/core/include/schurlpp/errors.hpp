#pragma once

#include <stdexcept>
#include <string>

namespace schurlpp {

/// Caller handed us something outside an operation's stated domain
/// (bad coordinates, mismatched lengths, parameters out of range, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to explore more states than its budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A postcondition that is supposed to hold unconditionally failed.
/// Seeing this means a bug in this library, not in the caller.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace schurlpp
