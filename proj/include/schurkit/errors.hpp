#pragma once

#include <stdexcept>
#include <string>

namespace schurkit {

// Base class for all errors raised by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally ill-matched arguments (non-square matrix, flag/shape length
// mismatch, index out of range).
struct dimension_error : error {
    using error::error;
};

// Arguments outside an operation's mathematical domain (negative exponent
// where a genuine polynomial is required, non-vexillary input to a
// vexillary-only routine, ...).
struct domain_error : error {
    using error::error;
};

// Malformed textual input or a request the tool refuses as misuse
// (e.g. brute-force enumeration on an oversized grid).
struct usage_error : error {
    using error::error;
};

// A computation was refused or stopped because it exceeds the configured
// time / size budget.
struct budget_error : error {
    using error::error;
};

// An internal invariant failed (e.g. a division that must be exact left a
// remainder). Always a bug, never a caller error.
struct internal_error : error {
    using error::error;
};

// Throws internal_error when `cond` is false.
inline void check_internal(bool cond, const char* msg) {
    if (!cond) throw internal_error(std::string("internal invariant violated: ") + msg);
}

} // namespace schurkit
