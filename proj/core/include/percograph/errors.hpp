#pragma once

#include <stdexcept>

namespace percograph {

// A degree sequence (or a construction request for one) cannot be realized as
// a simple graph.  The CLI maps this to exit code 2.
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An input exceeds an operation's guarded size envelope (exhaustive scans,
// desk-scale memory limits).  Overridable where a --force escape exists.
// The CLI maps this to exit code 2.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace percograph
